#include "fglie/sampling.hpp"

namespace fglie {

mpz_class random_residue(Rng &rng, const mpz_class &modulus) {
  if (modulus <= 0)
    throw std::invalid_argument("random_residue: modulus must be positive");
  const size_t words = mpz_sizeinbase(modulus.get_mpz_t(), 2) / 64 + 2;
  mpz_class r = 0;
  for (size_t i = 0; i < words; ++i) {
    r <<= 64;
    r += mpz_class(static_cast<unsigned long>(rng()));
  }
  return r % modulus;
}

Coeff random_ring_element(Ring ring, Rng &rng, int bound) {
  switch (ring.kind()) {
  case RingKind::Rational: {
    std::uniform_int_distribution<int> dist(-bound, bound);
    return Coeff::from_int(ring, dist(rng));
  }
  case RingKind::PAdic:
    return Coeff::from_integer(ring, random_residue(rng, ring.prime_power(ring.precision())));
  case RingKind::PAdicT: {
    Coeff t = Coeff::t(ring);
    Coeff power = Coeff::one(ring);
    Coeff sum = Coeff::zero(ring);
    for (int j = 0; j < ring.t_precision(); ++j) {
      sum += Coeff::from_integer(ring, random_residue(rng, ring.prime_power(ring.precision()))) * power;
      power *= t;
    }
    return sum;
  }
  }
  return Coeff::zero(ring);
}

Point random_bold_p_point(Ring ring, int prime, int d, Rng &rng, int bound) {
  const int bold_p = prime == 2 ? 4 : prime;
  Coeff scale = Coeff::from_int(ring, bold_p);
  Point x;
  for (int i = 0; i < d; ++i)
    x.push_back(scale * random_ring_element(ring, rng, bound));
  return x;
}

} // namespace fglie
