#!/usr/bin/env python3
"""Measure how reliably the secret parameter falls out of the quotient key.

Encrypts random messages under random s, hands an "attacker" only what an
eavesdropper holding the key material would have (ciphertext + quotients,
but not s), and scans s candidates by trial decryption. The true s is
recovered in every trial, which is the whole security story of this scheme.
"""

import argparse
import random
import string

from mellin_cipher.cipher import decrypt, encrypt, recover_s, CipherKey


def run_trials(trials: int, max_s: int, max_len: int, seed: int, verbose: bool) -> int:
    rng = random.Random(seed)
    misses = 0
    ambiguous = 0
    for trial in range(1, trials + 1):
        length = rng.randint(1, max_len)
        plaintext = "".join(rng.choice(string.ascii_uppercase) for _ in range(length))
        s = rng.randint(1, max_s)
        ciphertext, key = encrypt(plaintext, s)

        candidates = recover_s(ciphertext, key.quotients, 2 * max_s)
        hit = s in candidates
        misses += not hit
        ambiguous += len(candidates) > 1
        if verbose or not hit:
            decryptions = {
                c: decrypt(ciphertext, CipherKey(c, key.quotients)) for c in sorted(candidates)
            }
            print(
                f"trial {trial:>4}: len={length:<3} true_s={s:<3} "
                f"candidates={sorted(candidates)} -> {decryptions}"
            )
    print(f"\nrecovered the true s in {trials - misses}/{trials} trials "
          f"({ambiguous} with more than one candidate)")
    return 0 if misses == 0 else 1


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--max-s", type=int, default=16)
    parser.add_argument("--max-len", type=int, default=32)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--verbose", action="store_true", help="print every trial")
    args = parser.parse_args()
    return run_trials(args.trials, args.max_s, args.max_len, args.seed, args.verbose)


if __name__ == "__main__":
    raise SystemExit(main())
