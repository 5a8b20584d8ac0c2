# airy_oracle.py

"""
Extended-precision Airy oracle for the test suite: the Maclaurin series
Ai = c1 f - c2 g summed over 200 terms at 80 significant digits, so the
cancellation that limits the double-precision series does not matter here.
"""
import mpmath

_DIGITS = 80
_TERMS = 200


def airy_series(x):
    """
    Ai(x) and Ai'(x) as floats.

    :param x: Real, |x| <= 20.
    """
    with mpmath.workdps(_DIGITS):
        x = mpmath.mpf(x)
        x3 = x ** 3
        f_term, g_term = mpmath.mpf(1), x
        fp_term, gp_term = x * x / 2, mpmath.mpf(1)
        f, g, fp, gp = f_term, g_term, fp_term, gp_term
        for k in range(1, _TERMS):
            f_term *= x3 / ((3 * k - 1) * (3 * k))
            g_term *= x3 / ((3 * k) * (3 * k + 1))
            fp_term *= x3 / ((3 * k) * (3 * k + 2))
            gp_term *= x3 / ((3 * k - 2) * (3 * k))
            f += f_term
            g += g_term
            fp += fp_term
            gp += gp_term
        c1 = 1 / (mpmath.cbrt(9) * mpmath.gamma(mpmath.mpf(2) / 3))
        c2 = 1 / (mpmath.cbrt(3) * mpmath.gamma(mpmath.mpf(1) / 3))
        return float(c1 * f - c2 * g), float(c1 * fp - c2 * gp)


def airy_reference(x):
    """Ai(x) and Ai'(x) from mpmath's own implementation."""
    with mpmath.workdps(40):
        return float(mpmath.airyai(x)), float(mpmath.airyai(x, derivative=1))
