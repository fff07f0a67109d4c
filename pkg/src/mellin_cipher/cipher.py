"""Factorial coefficient cipher: transform, mod-26 split, and key recovery.

Encryption maps each letter value g_i to the exact integer g_i * e_i!, where
the exponent schedule e_i cycles through s, s+1, ..., 2s with period s+1.
Each transformed coefficient is split by division by 26: the residue
(represented in 1..26) becomes a ciphertext letter, the quotient joins the
private key. Decryption reverses the split and divides out the factorial;
every step is exact integer arithmetic, so round trips are lossless.

The quotient key is as long as the message and, together with the
ciphertext, determines the secret parameter s by direct search
(:func:`recover_s`), so the scheme offers no real secrecy. It is
implemented here as a faithful, testable artifact, not as a secure cipher.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .alphabet import decode_values, encode_text
from .errors import (
    InvalidParameter,
    LengthMismatch,
    NegativeArgument,
    NonPositiveInput,
    NotDivisible,
    ValueOutOfRange,
)

MODULUS = 26


@dataclass(frozen=True)
class CipherText:
    """Sequence of mod-26 residues, each represented in 1..26."""

    residues: tuple[int, ...]

    def __post_init__(self):
        for index, residue in enumerate(self.residues):
            if not 1 <= residue <= MODULUS:
                raise ValueOutOfRange(residue, f"residue at index {index}")

    @classmethod
    def from_letters(cls, text: str) -> "CipherText":
        return cls(tuple(encode_text(text, fold_case=False)))

    @property
    def letters(self) -> str:
        """The ciphertext as an uppercase string."""
        return decode_values(self.residues)

    def __len__(self) -> int:
        return len(self.residues)


@dataclass(frozen=True)
class CipherKey:
    """Private key: the secret parameter s plus one quotient per position."""

    s: int
    quotients: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.s < 1:
            raise InvalidParameter(f"secret parameter s must be >= 1, got {self.s}")
        for index, quotient in enumerate(self.quotients):
            if quotient < 0:
                raise ValueOutOfRange(quotient, f"quotient at index {index} (must be >= 0)")

    def __len__(self) -> int:
        return len(self.quotients)


def factorial(k: int) -> int:
    """Exact k! as an arbitrary-precision integer, with 0! = 1."""
    if k < 0:
        raise NegativeArgument(f"factorial of negative integer {k}")
    return math.factorial(k)


def exponent_schedule(s: int, n: int) -> list[int]:
    """First n factorial arguments for secret parameter s.

    Position i (1-based) gets exponent s + ((i-1) mod (s+1)), cycling
    through s..2s with period s+1.
    """
    if s < 1:
        raise InvalidParameter(f"secret parameter s must be >= 1, got {s}")
    if n < 0:
        raise InvalidParameter(f"schedule length must be >= 0, got {n}")
    period = s + 1
    return [s + (i % period) for i in range(n)]


def transform_coefficients(plain: Sequence[int], s: int) -> list[int]:
    """Scale each letter value by the factorial of its schedule exponent."""
    exponents = exponent_schedule(s, len(plain))
    coefficients = []
    for index, (value, exponent) in enumerate(zip(plain, exponents)):
        if not 1 <= value <= MODULUS:
            raise ValueOutOfRange(value, f"plaintext value at index {index}")
        coefficients.append(value * factorial(exponent))
    return coefficients


def split_mod26(n: int) -> tuple[int, int]:
    """Split n >= 1 into (quotient, residue) with the residue in 1..26.

    Always satisfies quotient * 26 + residue == n; when 26 divides n the
    residue is 26 and the quotient drops by one, so every residue maps to
    a letter.
    """
    if n < 1:
        raise NonPositiveInput(f"expected a positive integer, got {n}")
    quotient, residue = divmod(n, MODULUS)
    if residue == 0:
        quotient -= 1
        residue = MODULUS
    return quotient, residue


def encrypt(plaintext: str, s: int, fold_case: bool = True) -> tuple[CipherText, CipherKey]:
    """Encrypt an 'A'..'Z' string under secret parameter s.

    Returns the ciphertext residues and the private key (s plus the
    per-position quotients). Deterministic: equal inputs give equal outputs.
    """
    values = encode_text(plaintext, fold_case=fold_case)
    coefficients = transform_coefficients(values, s)
    quotients = []
    residues = []
    for coefficient in coefficients:
        quotient, residue = split_mod26(coefficient)
        quotients.append(quotient)
        residues.append(residue)
    return CipherText(tuple(residues)), CipherKey(s, tuple(quotients))


def decrypt(ciphertext: CipherText, key: CipherKey) -> str:
    """Recover the plaintext from a ciphertext and its private key.

    Rebuilds each coefficient as quotient * 26 + residue, divides out the
    schedule factorial exactly, and maps the results back to letters.
    Raises :class:`NotDivisible` or :class:`ValueOutOfRange` (with 1-based
    position) when the pair is corrupted.
    """
    if len(ciphertext) != len(key):
        raise LengthMismatch(
            f"ciphertext has {len(ciphertext)} letters but key has {len(key)} quotients"
        )
    exponents = exponent_schedule(key.s, len(ciphertext))
    values = []
    for position, (quotient, residue, exponent) in enumerate(
        zip(key.quotients, ciphertext.residues, exponents), start=1
    ):
        coefficient = quotient * MODULUS + residue
        divisor = factorial(exponent)
        value, remainder = divmod(coefficient, divisor)
        if remainder != 0:
            raise NotDivisible(position, coefficient, divisor)
        if not 1 <= value <= MODULUS:
            raise ValueOutOfRange(value, f"recovered value at position {position}")
        values.append(value)
    return decode_values(values)


def recover_s(ciphertext: CipherText, quotients: Iterable[int], max_s: int) -> set[int]:
    """Every s in 1..max_s under which (ciphertext, quotients) decrypts cleanly.

    This is the attack the quotient key invites: an eavesdropper holding the
    quotients needs no shared s, only a short scan. The true s is always in
    the returned set when max_s reaches it; small messages may admit several
    candidates, hence a set.
    """
    quotients = tuple(quotients)
    if len(ciphertext) != len(quotients):
        raise LengthMismatch(
            f"ciphertext has {len(ciphertext)} letters but {len(quotients)} quotients given"
        )
    if max_s < 1:
        raise InvalidParameter(f"max_s must be >= 1, got {max_s}")
    candidates = set()
    for s in range(1, max_s + 1):
        try:
            decrypt(ciphertext, CipherKey(s, quotients))
        except (NotDivisible, ValueOutOfRange):
            continue
        candidates.add(s)
    return candidates
