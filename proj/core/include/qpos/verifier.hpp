#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qpos/bounds.hpp"
#include "qpos/series.hpp"

namespace qpos {

/// sum gamma^k(n) q^n: the theta tail divided by (1-q^a)(1-q^b)(1-q^c).
IntegerSeries gamma_series(const FamilyParams& p, std::int64_t k, std::size_t T);

struct KCheck {
    std::int64_t k = 0;
    std::int64_t L = 0;
    std::int64_t N = 0;
    Integer min_coeff;
    std::size_t min_at = 0;
};

/// Desk-scale sanity check of k >= K (not part of the theorem's finite reduction).
struct SampleCheck {
    std::int64_t k_first = 0;
    std::int64_t k_last = 0; // inclusive; k_last < k_first means no sample
    std::size_t T = 0;
    bool pass = true;
};

struct PositivityCertificate {
    FamilyParams params;
    Thresholds thresholds;
    std::vector<KCheck> checked;
    SampleCheck sample;
    bool pass = false;
};

struct CertifyOptions {
    std::size_t sample_T = 2000;
    std::int64_t sample_k_extra = 3;
};

/// Computes K and N^k, expands gamma^k to order N^k - 1 for every k < K and
/// records the minimum coefficient. A negative coefficient there yields a
/// failing verdict; one in the k >= K sample throws ConsistencyError since
/// the bounds rule it out.
PositivityCertificate certify_family(const FamilyParams& p, const CertifyOptions& options = {});

/// Which interval of the nine-case split n falls into, the closed-form
/// lower bound for that interval, and the true coefficient.
struct CaseProbe {
    int case_id = 0;
    std::int64_t l = 0; // block index for cases 6-9, 0 otherwise
    Rational bound;
    Integer actual;
};

/// Lower bound only (no expansion). Valid for every k >= 1.
CaseProbe case_bound(const FamilyParams& p, std::int64_t k, std::int64_t n);

/// The telescoped block sum over j < l of the four F differences, in closed form.
Rational block_sum_closed_form(const FamilyParams& p, std::int64_t k, std::int64_t l, std::int64_t n);

/// case_bound plus the true gamma^k(n). Pass a precomputed gamma series of
/// order >= n to avoid re-expanding.
CaseProbe case_bound_probe(const FamilyParams& p, std::int64_t k, std::int64_t n);
CaseProbe case_bound_probe(const FamilyParams& p, std::int64_t k, std::int64_t n, const IntegerSeries& gamma);

} // namespace qpos
