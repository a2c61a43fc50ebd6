"""System key material and setup.

Setup layers the searchable-matching parameters on top of a Paillier
keypair: a secret scalar ``sigma``, the matching exponent
``beta = sigma * lambda mod phi(n^2)`` published to everyone, and the
secret letter multiplier ``gamma = sigma * L(g^lambda mod n^2) mod n``.
The storage server receives only the reduced key (security parameter,
beta, n) and can evaluate match checks but nothing else.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, fields

from . import paillier
from .errors import CryptoError
from .hashes import HashSuite
from .numbers import powmod, random_unit, rng_or_default

L_DESCRIPTOR = "(x-1)/n"


@dataclass(frozen=True)
class SystemPublic:
    """Public parameters: enough to encrypt queries and verify nothing."""

    security_bits: int
    paillier: paillier.PaillierPublic
    beta: int
    group_base: int  # public element P; eta*P ranges over the order-n group
    hash_name: str

    @property
    def n(self) -> int:
        return self.paillier.n

    def hash_suite(self) -> HashSuite:
        return HashSuite(n=self.paillier.n, algorithm=self.hash_name)


@dataclass(frozen=True)
class SystemSecret:
    """Encryptor-side secrets: sigma, gamma, and the Paillier secret.

    ``l0`` caches L(g^lambda mod n^2) mod n, which the hardened trapdoor
    construction consumes directly.
    """

    sigma: int
    gamma: int
    l0: int
    paillier: paillier.PaillierSecret


@dataclass(frozen=True)
class SpuKey:
    """The storage server's entire key: nothing here reveals sigma or
    lambda individually, only their product inside beta."""

    security_bits: int
    beta: int
    n: int
    l_descriptor: str = L_DESCRIPTOR


SPU_INTEGER_FIELDS = frozenset({"security_bits", "beta", "n"})


@dataclass(frozen=True)
class SystemKeys:
    public: SystemPublic
    secret: SystemSecret
    spu: SpuKey


def setup(security_bits: int = 128, paillier_bits: int = 2048,
          safe_primes: bool = True, hash_name: str = "sha256",
          rng: random.Random | None = None,
          paillier_keys: tuple[paillier.PaillierPublic, paillier.PaillierSecret] | None = None,
          ) -> SystemKeys:
    """Generate the full key set for one deployment.

    ``paillier_keys`` is a test hook for injecting a deterministic
    keypair (e.g. from toy primes); otherwise a fresh one is generated at
    ``paillier_bits``.
    """
    rng = rng_or_default(rng)
    if paillier_keys is None:
        pk, sk = paillier.keygen(paillier_bits, safe_primes=safe_primes, rng=rng)
    else:
        pk, sk = paillier_keys
    n, n2 = pk.n, pk.n_squared
    sigma = random_unit(n, rng)
    beta = sigma * sk.lam % sk.phi_n_squared
    l0 = paillier.l_function(int(powmod(pk.g, sk.lam, n2)), n) % n
    gamma = sigma * l0 % n
    keys = SystemKeys(
        public=SystemPublic(security_bits=security_bits, paillier=pk,
                            beta=beta, group_base=random_unit(n, rng),
                            hash_name=hash_name),
        secret=SystemSecret(sigma=sigma, gamma=gamma, l0=l0, paillier=sk),
        spu=SpuKey(security_bits=security_bits, beta=beta, n=n),
    )
    _validate(keys)
    return keys


def _validate(keys: SystemKeys) -> None:
    sec, pub = keys.secret, keys.public
    if pub.beta != sec.sigma * sec.paillier.lam % sec.paillier.phi_n_squared:
        raise CryptoError("beta does not match sigma * lambda mod phi(n^2)")
    if sec.gamma != sec.sigma * sec.l0 % pub.n:
        raise CryptoError("gamma does not match sigma * L(g^lambda) mod n")
    extra = {f.name for f in fields(SpuKey)} - SPU_INTEGER_FIELDS - {"l_descriptor"}
    if extra:
        raise CryptoError(f"storage-server key carries unexpected fields: {extra}")
