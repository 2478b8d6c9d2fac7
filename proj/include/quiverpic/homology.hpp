#pragma once

// Integer homology through Smith normal form, and the rank shortcut through
// basic weights.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quiverpic/chain_complex.hpp"

namespace quiverpic {

using BigInt = boost::multiprecision::cpp_int;

struct SnfResult {
  std::vector<BigInt> diagonal;  // nonzero invariant factors d_1 | d_2 | ...
  std::size_t rank = 0;
};

SnfResult smith_normal_form(const SparseMatrix& m);
SnfResult smith_normal_form(const std::vector<std::vector<std::int64_t>>& dense);

struct HomologySummary {
  std::vector<std::int64_t> betti;               // degree 0..top
  std::vector<std::vector<std::string>> torsion;  // decimal invariant factors > 1
  bool torsion_free() const;
};

/// Throws InvalidComplexError if some D_{k-1} D_k is nonzero.
HomologySummary homology_of(const GradedComplex& complex);

/// Betti numbers of the associated graded complex: the sum over weights of
/// the homology of the subquotients.
std::vector<std::int64_t> associated_graded_betti(const SignVector& eps);

std::int64_t betti_fast(const SignVector& eps, int k);
std::vector<std::int64_t> betti_fast_all(const SignVector& eps);

std::int64_t euler_characteristic(const SignVector& eps);

}  // namespace quiverpic
