#pragma once

#include <optional>
#include <set>

#include "garside/budget.h"
#include "garside/normal_form.h"

namespace garside {

/// Initial factor τ^{-inf}(x₁). Throws std::domain_error when ℓ = 0.
Simple iota(const NormalForm& x);
/// Final factor x_ℓ. Throws std::domain_error when ℓ = 0.
Simple phi(const NormalForm& x);

/// Δ-powers count as rigid.
bool is_rigid(const NormalForm& x);

/// Conjugation by ι(x); a twisted rotation of the factors when x is rigid.
NormalForm cycling(const NormalForm& x);

/// Closure of {x} under cycling and τ. Δ-powers are their own orbit.
std::set<NormalForm> orbit(const NormalForm& x, const Budget& budget = {});

/// ι(x) ∧ ∂φ(x).
Simple preferred_prefix(const NormalForm& x);
NormalForm cyclic_slide(const NormalForm& x);

struct SlideResult {
  NormalForm element;
  int transient = 0;
  int cycle_length = 1;
};

/// Iterates cyclic sliding until an element repeats and returns the first
/// element of the circuit. Throws BudgetExceeded past budget.max_slides steps.
SlideResult slide_to_circuit(const NormalForm& x, const Budget& budget = {});

/// Smallest n ≤ bound with yⁿ rigid. When found, also checks that yᵏ is rigid
/// exactly for the multiples k of n up to the bound (std::logic_error otherwise).
std::optional<int> rigid_exponent(const NormalForm& y, int bound = 32);

/// The rigid z with z^d = x, read off the factor sequence; none when x is
/// not a d-th power of that shape.
std::optional<NormalForm> root_of_rigid(const NormalForm& x, int d);

}  // namespace garside
