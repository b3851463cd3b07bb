#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace garside {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

/// Divide by the gcd of the entries; the zero vector stays zero.
IntVec primitive(IntVec v);

/// Rank over Q, fraction-free Gaussian elimination.
int int_rank(std::vector<IntVec> rows);

/// Exact feasibility over Q of the homogeneous sign system
///   sign(<normals[i], x>) = signs[i]   for signs[i] in {'+','0','-'}.
/// Equalities are eliminated by substitution, strict inequalities by
/// Fourier-Motzkin elimination; no floating point anywhere.
bool sign_system_feasible(const std::vector<IntVec>& normals, const std::string& signs);

}  // namespace garside
