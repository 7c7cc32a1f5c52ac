#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "covermotive/group.hpp"
#include "covermotive/limits.hpp"

namespace covermotive {

/// (g_1, ..., g_n) with g_1 ... g_n = 1.
using HurwitzVector = std::vector<Element>;

/// Prescribed conjugacy class for each entry.
using NielsenClass = ClassTuple;

/// All product-one tuples of length n in lexicographic order, optionally
/// restricted to the given classes. Throws DegreeOverflow when |G|^(n-1)
/// exceeds the enumeration cap.
std::vector<HurwitzVector> enumerate_hurwitz(const FiniteGroup& group, int n,
                                             const std::optional<NielsenClass>& constraint = std::nullopt,
                                             const Limits& limits = Limits::from_env());

/// Hurwitz move sigma_i for i in 1..n-1:
/// (.., g_i, g_{i+1}, ..) -> (.., g_i g_{i+1} g_i^{-1}, g_i, ..).
HurwitzVector braid_generator(const FiniteGroup& group, const HurwitzVector& v, int i);

/// Inverse move: (.., g_i, g_{i+1}, ..) -> (.., g_{i+1}, g_{i+1}^{-1} g_i g_{i+1}, ..).
HurwitzVector braid_generator_inverse(const FiniteGroup& group, const HurwitzVector& v, int i);

/// Lexicographically smallest simultaneous conjugate.
HurwitzVector conjugation_canonical(const FiniteGroup& group, const HurwitzVector& v);

/// Orbits of the braid action on `vectors` (which must be closed under it).
/// With `mod_conjugation`, vectors are first replaced by their conjugation
/// canonical forms and orbits are taken in the quotient set. Each orbit is a
/// sorted, duplicate-free list; orbits are ordered by their first element.
/// Output does not depend on the input order or on `jobs`.
std::vector<std::vector<HurwitzVector>> braid_orbits(const FiniteGroup& group,
                                                     const std::vector<HurwitzVector>& vectors,
                                                     bool mod_conjugation, int jobs = 1);

std::uint64_t nielsen_count(const FiniteGroup& group, const NielsenClass& classes,
                            const Limits& limits = Limits::from_env());

}  // namespace covermotive
