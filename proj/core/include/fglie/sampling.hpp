#pragma once

#include <cstdint>
#include <random>

#include "fglie/coeff.hpp"

namespace fglie {

using Rng = std::mt19937_64;

/// Uniform-ish integer in [0, modulus) built from 64-bit draws.
mpz_class random_residue(Rng &rng, const mpz_class &modulus);

/// A random element of R: an integer in [-bound, bound] for Rational, a
/// uniform residue for PAdic, a polynomial of uniform residues for PAdicT.
Coeff random_ring_element(Ring ring, Rng &rng, int bound = 5);

/// A point of G(bold_p R) / element of bold_p L: each coordinate is bold_p
/// times random_ring_element.  Over Q the prime only fixes the scale.
Point random_bold_p_point(Ring ring, int prime, int d, Rng &rng, int bound = 5);

} // namespace fglie
