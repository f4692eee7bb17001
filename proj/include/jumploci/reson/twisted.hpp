#pragma once

#include <stdexcept>
#include <vector>

#include "jumploci/cdga/cdga.hpp"
#include "jumploci/conn/flat.hpp"
#include "jumploci/reson/sl2rep.hpp"

namespace jumploci {

struct NotFlat : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotAModule : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// d_w : A^i (x) V -> A^{i+1} (x) V, d_w(a (x) v) = da (x) v + sum_r xi_r a (x) ops[r] v,
/// where xi_r runs over the basis of A^1. Index of a (x) v is a * dim V + v.
Matrix<Rational> twisted_differential(const CDGA& a, const std::vector<Matrix<Rational>>& ops, int i);

/// Cohomology dimensions of (A (x) V, d_w) in degrees 0..top. Throws NotFlat
/// when d_w does not square to zero.
std::vector<std::size_t> twisted_complex_dims(const CDGA& a, const std::vector<Matrix<Rational>>& ops);

/// ops[r] = theta(omega row r).
std::vector<Matrix<Rational>> connection_operators(const Sl2Rep& rep, const GOneForm& omega);

/// dim H^i(A (x) V, d_omega) for a flat sl2-valued omega. Throws NotFlat.
std::vector<std::size_t> twisted_dims(const CDGA& a, const Sl2Rep& rep, const GOneForm& omega);

/// dim H^i(h, U) for the module given by rho(e_1)..rho(e_n). Throws NotAModule.
std::size_t lie_cohomology(const LieAlgebra& h, const std::vector<Matrix<Rational>>& rho, int i);

}  // namespace jumploci
