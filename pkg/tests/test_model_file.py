# test_model_file.py

import pytest

from det_common.errors import InvalidArgumentError, ModelFileError
from sigma_models.model_file import load_model, parse_model_text


def test_builtin_identifiers():
    assert load_model("kpz").name == "kpz", "kpz is built in"
    assert not load_model("cutoff").admissible, "cutoff is built in and flagged"
    assert load_model("zero").name == "zero", "zero is built in"


def test_unknown_identifier_names_valid_ids():
    with pytest.raises(InvalidArgumentError) as excinfo:
        load_model("none")
    assert "kpz" in str(excinfo.value) and "cutoff" in str(excinfo.value), "message should list valid ids"


def test_parse_atoms_with_comments():
    name, spec = parse_model_text("# two atoms\nname steep\natom 1.0 2.0\natom 0.5 0.5  # lower\n")
    assert name == "steep", "explicit name"
    assert spec.atoms == ((0.5, 0.5), (1.0, 2.0)), "atoms are sorted by location"


@pytest.mark.parametrize("text, line", [
    ("atom 1.0\n", 1),
    ("atom 1.0 2.0\natom x 1\n", 2),
    ("\n\nweight 1 2\n", 3),
    ("atom 1.0 -2.0\n", 0),
])
def test_parse_errors_are_positional(text, line):
    with pytest.raises(ModelFileError) as excinfo:
        parse_model_text(text, "m.txt")
    assert excinfo.value.line_number == line, "error should point at the offending line"
    assert str(excinfo.value).startswith(f"m.txt:{line}:"), "message should carry path and line"


def test_load_model_file(tmp_path):
    path = tmp_path / "pair.model"
    path.write_text("atom 0.5 0.5\natom 1 2\n")
    model = load_model(str(path))
    assert model.name == "pair", "name defaults to the file stem"
    assert model.c_plus == 1.0 and model.c_plus_prime == 2.0, "constants from the atoms"
