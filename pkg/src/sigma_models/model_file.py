# model_file.py

"""
Module: model_file
Purpose:
    Resolve a model identifier given on the command line: one of the built-in
    names or the path of a text file listing Laplace-measure atoms.

    File format (one entry per line, ``#`` starts a comment)::

        name my_model
        atom 0.5 0.5
        atom 1.0 2.0
"""
import logging
import os
from typing import Dict, Callable, List, Tuple

from det_common.errors import InvalidArgumentError, ModelFileError
from sigma_models.models import (
    LaplaceMeasureSpec,
    SigmaModel,
    make_cutoff_model,
    make_kpz_model,
    make_laplace_model,
    make_zero_model,
)

logger = logging.getLogger(__name__)

BUILTIN_MODELS: Dict[str, Callable[[], SigmaModel]] = {
    "kpz": make_kpz_model,
    "cutoff": make_cutoff_model,
    "zero": make_zero_model,
}


def parse_model_text(text: str, path: str = "<string>") -> Tuple[str, LaplaceMeasureSpec]:
    """
    Parse atom-file contents.

    :param text: File contents.
    :param path: Name used in error messages.
    :return: ``(name, spec)``; the name defaults to the file's base name.
    :raises ModelFileError: On the first malformed line.
    """
    name = os.path.splitext(os.path.basename(path))[0] or "laplace"
    atoms: List[Tuple[float, float]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        keyword = fields[0].lower()
        if keyword == "name":
            if len(fields) != 2:
                raise ModelFileError(path, number, "expected 'name <identifier>'")
            name = fields[1]
        elif keyword == "atom":
            if len(fields) != 3:
                raise ModelFileError(path, number, "expected 'atom <location> <mass>'")
            try:
                location, mass = float(fields[1]), float(fields[2])
            except ValueError:
                raise ModelFileError(path, number, f"non-numeric atom entry {line!r}") from None
            atoms.append((location, mass))
        else:
            raise ModelFileError(path, number, f"unknown keyword {fields[0]!r}")
    if not atoms:
        raise ModelFileError(path, 0, "no 'atom' lines found")
    atoms.sort()
    try:
        spec = LaplaceMeasureSpec(tuple(atoms))
    except InvalidArgumentError as exc:
        raise ModelFileError(path, 0, str(exc)) from None
    return name, spec


def load_model(identifier: str) -> SigmaModel:
    """
    Build the model named by ``identifier``.

    :param identifier: ``kpz``, ``cutoff``, ``zero`` or a path to an atom file.
    :raises InvalidArgumentError: If the identifier is neither a built-in nor a file.
    """
    factory = BUILTIN_MODELS.get(identifier)
    if factory is not None:
        return factory()
    if os.path.isfile(identifier):
        with open(identifier, "r", encoding="utf-8") as handle:
            name, spec = parse_model_text(handle.read(), identifier)
        logger.info("loaded model %s with %d atoms from %s", name, len(spec.atoms), identifier)
        return make_laplace_model(spec, name=name)
    valid = ", ".join(sorted(BUILTIN_MODELS))
    raise InvalidArgumentError(f"unknown model {identifier!r}; valid ids are {valid} or a model file path")
