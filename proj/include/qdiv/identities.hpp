#pragma once

// Catalog of (p,q)-identities around divisor functions, each given as a pair
// of side builders over the truncated series ring, plus the verifier that
// checks LHS - RHS vanishes inside the truncation box.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <qdiv/series.hpp>

namespace qdiv
{

enum class IdentityId {
    U81,
    HAMME,
    UCH,
    DILCH,
    PRODINGER,
    FLZ,
    NEW,
    LIU,
    AGARWAL,
    MAIN1,
    MAIN2,
    NEWPF,
    DD1,
    DD2,
    DD3,
    STAR,
    NEW2,
    SYM,
    QSQ,
    NEWNEW,
    MNPQ,
    CORNEW,
    LONG,
    LONGINF,
    ODDDIV,
    UCH001,
    UCH002,
    PF12,
    PRODNEW,
    RDIV,
    RU81,
    DILCHNEW,
    DILCHCOR,
    QBT1,
    APM1,
    P1,
    M123,
    MAIN3,
    M23,
    VH84,
    BS,
    GVH,
    GVHSER,
};

// Integer parameters by name (m, n, r, i, N, sign, seed). Ordered so that
// iteration and reports are deterministic.
using Params = std::map<std::string, long>;

struct ParamRange {
    long lo = 0;
    long hi = 0;
};
using ParamRanges = std::map<std::string, ParamRange>;

struct Sides {
    MultiSeries lhs;
    MultiSeries rhs;
    // Index at which the last infinite sum was cut off; -1 when the
    // identity has only finite sums.
    long stop_index = -1;
};

using SideBuilder = Sides (*)(const Params &, const Truncation &);

struct IdentityInfo {
    IdentityId id;
    std::string_view name;
    std::string_view label;
    std::vector<std::string> params;
    std::string_view constraints;
    // Lower bound on the designated exponent of the k-th summand, for
    // identities with infinite sums.
    std::string_view tail_bound;
    std::string_view anchor;
    // Parameter grid and caps used by the default sweep.
    ParamRanges default_ranges;
    Truncation default_trunc;
    SideBuilder build;
};

const std::vector<IdentityInfo> &catalog();
const IdentityInfo &info(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);
std::string_view name_of(IdentityId id);

struct IdentityInstance {
    IdentityId id{};
    Params params;
    Truncation trunc;
};

std::string to_string(const Params &);

// Throws InvalidParams if a parameter is missing, unknown or outside the
// identity's constraints.
void validate(const IdentityInstance &);

// Throws InvalidParams or TruncationTooSmall.
Sides build_sides(const IdentityInstance &);

struct VerificationResult {
    IdentityInstance instance;
    bool residual_zero = false;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
    long stop_index = -1;
    std::chrono::duration<double> elapsed{};
    // Set when building failed (sweeps record errors instead of throwing).
    std::optional<std::string> error_kind;
    std::optional<std::string> error;

    bool passed() const noexcept
    {
        return residual_zero && !error;
    }
};

// Propagates InvalidParams / TruncationTooSmall.
VerificationResult verify(const IdentityInstance &);

struct SweepOptions {
    // Skip grid points that violate the identity's constraints instead of
    // reporting them as errors.
    bool admissible_only = false;
    // Worker count; 0 means all available threads, 1 runs serially.
    int jobs = 0;
};

// Cartesian product of ranges in parameter-name order; parameters missing
// from `ranges` fall back to the catalog default range.
std::vector<IdentityInstance> expand(IdentityId id, const ParamRanges &ranges, const Truncation &tr,
                                     bool admissible_only);

// Verifies every instance; errors are recorded per instance. Results are in
// instance order regardless of the number of workers.
std::vector<VerificationResult> verify_all(const std::vector<IdentityInstance> &instances, int jobs = 0);

std::vector<VerificationResult> sweep(IdentityId id, const ParamRanges &ranges, const Truncation &tr,
                                      const SweepOptions &opts = {});

// Specialisation of a general identity to a special one: the general sides
// are built with `general_params` at `general_trunc`, the substitutions are
// applied in order, the result is multiplied by `factor` (when set) and
// restricted to `compare_trunc`, and must then equal the special sides built
// with `special_params`.
struct Binding {
    Params general_params;
    Params special_params;
    std::vector<std::pair<Var, Monomial>> substitutions;
    Truncation general_trunc;
    Truncation compare_trunc;
    std::function<MultiSeries(const Truncation &)> factor;
    // Caps that must hold headroom before substituting a variable by a
    // constant, so that the collapsed sums are complete.
    std::vector<Var> headroom;
};

bool reduction_check(IdentityId general, IdentityId special, const Binding &);

// NEW at r = 0 in the limit x -> 1, compared against CORNEW: the k >= 1
// parts of NEW evaluate to CORNEW's left side and the pole-free closed form
// of the remaining k = 0 terms evaluates to CORNEW's right side.
bool new_limit_x1_check(long m, long n, const Truncation &tr);

struct NamedReduction {
    std::string name;
    std::function<bool()> run;
};

// The reduction statements checked by the acceptance suite.
std::vector<NamedReduction> standard_reductions();

} // namespace qdiv
