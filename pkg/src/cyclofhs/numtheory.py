"""Exact integer arithmetic helpers for odd prime-power moduli.

Everything here is deterministic and overflow-free (Python integers are
unbounded); the desk-scale modulus cap is enforced where instances are
built, not here.
"""

from dataclasses import dataclass

# Deterministic Miller-Rabin witness set, valid for all inputs below 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_odd_prime(x: int) -> bool:
    """True iff x is a prime other than 2."""
    if x < 3 or x % 2 == 0:
        return False
    d = x - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        if a % x == 0:
            continue
        y = pow(a, d, x)
        if y == 1 or y == x - 1:
            continue
        for _ in range(r - 1):
            y = y * y % x
            if y == x - 1:
                break
        else:
            return False
    return True


def pow_mod(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus with a nonnegative exponent and modulus >= 2."""
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise ValueError(f"exponent must be >= 0, got {exp}")
    return pow(base % modulus, exp, modulus)


@dataclass(frozen=True)
class PAdicDecomposition:
    """t = p**e * u with u coprime to p."""

    e: int
    u: int


def p_adic_decompose(t: int, p: int) -> PAdicDecomposition:
    """Split a positive integer into its p-valuation and unit part."""
    if t <= 0:
        raise ValueError(f"t must be positive, got {t}")
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    e = 0
    u = t
    while u % p == 0:
        u //= p
        e += 1
    return PAdicDecomposition(e=e, u=u)


def quadratic_character(u: int, p: int) -> int:
    """+1 if u is a square modulo the odd prime p, -1 otherwise.

    Euler's criterion; u must be coprime to p.  For a unit u this also
    decides squareness modulo any power p^k.
    """
    if u % p == 0:
        raise ValueError(f"{u} is not a unit mod {p}")
    r = pow(u % p, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def _prime_factors(x: int) -> list[int]:
    out = []
    d = 2
    while d * d <= x:
        if x % d == 0:
            out.append(d)
            while x % d == 0:
                x //= d
        d += 1 if d == 2 else 2
    if x > 1:
        out.append(x)
    return out


def primitive_root_mod_p_squared(p: int) -> int:
    """Smallest g that generates the unit group mod p**2.

    Such a g generates the units mod p**k for every k >= 1 (p odd).
    """
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    factors = _prime_factors(p - 1)
    for g in range(2, p * p):
        if g % p == 0:
            continue
        if any(pow(g, (p - 1) // q, p) == 1 for q in factors):
            continue
        if pow(g, p - 1, p * p) != 1:
            return g
    raise ArithmeticError(f"no primitive root found mod {p}^2")
