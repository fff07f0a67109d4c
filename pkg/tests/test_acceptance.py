"""Acceptance suite: one test per criterion, each printing a PASS line.

Run ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; plain ``pytest`` runs them silently as ordinary tests. Timed
criteria measure wall-clock with generous slack below their budgets.
"""

import random
import string
import time

from mellin_cipher.cipher import (
    CipherKey,
    CipherText,
    decrypt,
    encrypt,
    exponent_schedule,
    recover_s,
    transform_coefficients,
)
from mellin_cipher.alphabet import encode_text
from mellin_cipher.keyio import read_key, write_key
from mellin_cipher.oracle import gamma_identity_check, scaling_check, shift_check


def _passed(name: str, detail: str = ""):
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE PASS: {name}{suffix}")


def test_known_answer_example_one():
    start = time.perf_counter()
    ciphertext, key = encrypt("HELLO", 4)
    elapsed = time.perf_counter() - start
    assert ciphertext.letters == "JBHDN"
    assert key.quotients == (7, 23, 332, 2326, 23261)
    assert transform_coefficients([8, 5, 12, 12, 15], 4) == [192, 600, 8640, 60480, 604800]
    assert elapsed < 1e-3
    _passed("known-answer example 1 (s=4)", f"encrypt in {elapsed * 1e6:.0f} us")


def test_known_answer_example_one_inverse():
    ciphertext = CipherText.from_letters("JBHDN")
    key = CipherKey(4, (7, 23, 332, 2326, 23261))
    plaintext = decrypt(ciphertext, key)
    assert plaintext == "HELLO"
    assert encode_text(plaintext) == [8, 5, 12, 12, 15]
    _passed("known-answer example 1 inverse")


def test_known_answer_example_two():
    ciphertext, key = encrypt("HELLO", 3)
    assert transform_coefficients([8, 5, 12, 12, 15], 3) == [48, 120, 1440, 8640, 90]
    assert key.quotients == (1, 4, 55, 332, 3)
    assert ciphertext.residues == (22, 16, 10, 8, 12)
    # fifth letter: 90 = 3*26 + 12 forces residue 12 = 'L'
    assert ciphertext.letters == "VPJHL"
    assert decrypt(ciphertext, key) == "HELLO"
    _passed("known-answer example 2 (s=3)", "fifth letter L per 90 = 3*26 + 12")


def test_round_trip_randomized():
    rng = random.Random(20260817)
    start = time.perf_counter()
    for _ in range(1000):
        length = rng.randint(0, 64)
        plaintext = "".join(rng.choice(string.ascii_uppercase) for _ in range(length))
        s = rng.randint(1, 12)
        ciphertext, key = encrypt(plaintext, s)
        assert decrypt(ciphertext, key) == plaintext
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    _passed("randomized round trip", f"1000 cases in {elapsed:.2f} s")


def test_schedule_period():
    for s in range(1, 11):
        n = 3 * (s + 1)
        schedule = exponent_schedule(s, n)
        period = s + 1
        assert schedule == [s + (i % period) for i in range(n)]
        for i in range(n - period):
            assert schedule[i] == schedule[i + period]
        assert len(set(schedule[:period])) == period  # no shorter period
    assert exponent_schedule(4, 5) == [4, 5, 6, 7, 8]
    assert exponent_schedule(3, 5) == [3, 4, 5, 6, 3]
    _passed("exponent schedule period")


def test_oracle_gamma_identity():
    start = time.perf_counter()
    checked = 0
    for n in range(1, 16):
        for s in range(1, 17 - n):  # s + n - 1 <= 15
            assert gamma_identity_check(n, s, 1e-9)
            checked += 1
    elapsed = time.perf_counter() - start
    assert checked == 120
    assert elapsed < 1.0
    _passed("oracle gamma identity", f"{checked} pairs in {elapsed * 1e3:.0f} ms")


def test_oracle_transform_properties():
    for a in (0.5, 1.0, 2.0, 4.0):
        for n in range(1, 7):
            for s in range(1, 7):
                assert scaling_check(a, n, s, 1e-8)
    for a in (0, 1, 2, 3):
        for n in range(1, 6):
            for s in range(1, 6):
                assert shift_check(a, n, s, 1e-9)
    _passed("oracle scaling and shift properties")


def test_key_recovery_containment():
    rng = random.Random(987654321)
    start = time.perf_counter()
    for _ in range(200):
        length = rng.randint(1, 32)
        plaintext = "".join(rng.choice(string.ascii_uppercase) for _ in range(length))
        s = rng.randint(1, 16)
        ciphertext, key = encrypt(plaintext, s)
        candidates = recover_s(ciphertext, key.quotients, 32)
        assert s in candidates
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    _passed("key recovery containment", f"200 pairs in {elapsed:.2f} s")


def test_key_serialization_round_trip():
    rng = random.Random(13)
    for _ in range(500):
        s = rng.randint(1, 64)
        count = rng.randint(0, 24)
        quotients = tuple(rng.randint(0, 10**60) for _ in range(count))
        key = CipherKey(s, quotients)
        data = write_key(key)
        recovered = read_key(data)
        assert recovered == key
        assert write_key(recovered) == data
    _passed("key serialization round trip", "500 keys, quotients up to 1e60")
