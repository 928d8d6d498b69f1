#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "qpos/series.hpp"

namespace qpos {

/// Outcome of comparing two independently expanded sides of an identity.
struct IdentityReport {
    std::string name;
    std::size_t order = 0;
    std::string lhs_hash;
    std::string rhs_hash;
    bool equal = false;
    std::optional<std::size_t> first_mismatch;
};

IdentityReport compare_sides(std::string name, const IntegerSeries& lhs, const IntegerSeries& rhs);

// Generating functions used throughout.
IntegerSeries overpartition_series(std::size_t T); ///< (-q;q)_inf / (q;q)_inf
IntegerSeries pod_series(std::size_t T);           ///< (-q;q^2)_inf / (q^2;q^2)_inf

/// (q,q^4,q^5;q^5)_inf and (q^2,q^3,q^5;q^5)_inf.
enum class JacobiProduct { q1_q4_q5, q2_q3_q5 };
IntegerSeries jacobi_product(JacobiProduct which, std::size_t T);

/// (q;q)_inf against sum (-1)^j q^{j(3j+1)/2}.
IdentityReport check_pentagonal(std::size_t T);

/// The two Gauss identities: theta(1,0) = (q;q)/(-q;q) and the one-sided
/// sum of (-1)^j q^{j(2j+1)} (1 - q^{2j+1}) = (q^2;q^2)/(-q;q^2).
/// Factors (1 + q^e) are applied directly as two-term multiplications/divisions.
std::pair<IdentityReport, IdentityReport> check_gauss(std::size_t T);

/// Truncated pentagonal number theorem with its explicit positive tail.
IdentityReport check_andrews_merca(std::int64_t k, std::size_t T);

/// Truncated Gauss identities of Guo and Zeng: overpartition for theta(1,0), pod for theta(2,1).
enum class GuoZeng { overpartition, pod };
IdentityReport check_guo_zeng(GuoZeng variant, std::int64_t k, std::size_t T);

/// Triple-product specialisations against the matching theta forms.
IdentityReport check_jacobi(JacobiProduct which, std::size_t T);

/// Truncated-sum positivity statements and their tail-sum rewrites, one per
/// weighting: partitions, pod, overpartitions and the two mod-5 products.
enum class Equivalence { partitions, pod, overpartitions, mod5_q1_q4, mod5_q2_q3 };
IdentityReport check_equivalence(Equivalence pair, std::int64_t k, std::size_t T);

/// The tail forms whose nonnegativity is claimed for every k >= 1.
enum class TailFamily { partitions, overpartitions, pod, mod5_q1_q4, mod5_q2_q3 };
IntegerSeries tail_positivity_series(TailFamily which, std::int64_t k, std::size_t T);

std::string_view name_of(Equivalence e);
std::string_view name_of(TailFamily t);
std::string_view name_of(JacobiProduct j);
std::optional<Equivalence> parse_equivalence(std::string_view s);

inline constexpr Equivalence kAllEquivalences[] = {Equivalence::partitions, Equivalence::pod,
                                                   Equivalence::overpartitions, Equivalence::mod5_q1_q4,
                                                   Equivalence::mod5_q2_q3};
inline constexpr TailFamily kAllTailFamilies[] = {TailFamily::partitions, TailFamily::overpartitions, TailFamily::pod,
                                                  TailFamily::mod5_q1_q4, TailFamily::mod5_q2_q3};

} // namespace qpos
