#include <qdiv/errors.hpp>
#include <qdiv/identities.hpp>

#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qdiv
{

Sides build_sides(const IdentityInstance &inst)
{
    validate(inst);
    return info(inst.id).build(inst.params, inst.trunc);
}

VerificationResult verify(const IdentityInstance &inst)
{
    const auto start = std::chrono::steady_clock::now();
    const Sides sides = build_sides(inst);
    VerificationResult r;
    r.instance = inst;
    r.lhs_terms = sides.lhs.size();
    r.rhs_terms = sides.rhs.size();
    r.stop_index = sides.stop_index;
    r.residual_zero = (sides.lhs - sides.rhs).is_zero();
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

namespace
{

void product(const IdentityInfo &entry, const ParamRanges &ranges, std::size_t pos, Params &current,
             const Truncation &tr, bool admissible_only, std::vector<IdentityInstance> &out)
{
    if (pos == entry.params.size()) {
        IdentityInstance inst{entry.id, current, tr};
        if (admissible_only) {
            try {
                validate(inst);
            } catch (const InvalidParams &) {
                return;
            }
        }
        out.push_back(std::move(inst));
        return;
    }
    const auto &name = entry.params[pos];
    auto it = ranges.find(name);
    if (it == ranges.end()) {
        it = entry.default_ranges.find(name);
        if (it == entry.default_ranges.end()) {
            throw InvalidParams(std::string(entry.name) + ": no range for parameter '" + name + "'");
        }
    }
    for (long v = it->second.lo; v <= it->second.hi; ++v) {
        current[name] = v;
        product(entry, ranges, pos + 1, current, tr, admissible_only, out);
    }
}

VerificationResult failed(const IdentityInstance &inst, std::string kind, std::string what)
{
    VerificationResult r;
    r.instance = inst;
    r.error_kind = std::move(kind);
    r.error = std::move(what);
    return r;
}

VerificationResult verify_recording(const IdentityInstance &inst)
{
    try {
        return verify(inst);
    } catch (const InvalidParams &e) {
        return failed(inst, "InvalidParams", e.what());
    } catch (const TruncationTooSmall &e) {
        return failed(inst, "TruncationTooSmall", e.what());
    } catch (const OutOfTruncation &e) {
        return failed(inst, "OutOfTruncation", e.what());
    } catch (const NonInvertible &e) {
        return failed(inst, "NonInvertible", e.what());
    } catch (const NonTruncating &e) {
        return failed(inst, "NonTruncating", e.what());
    } catch (const std::exception &e) {
        return failed(inst, "InternalError", e.what());
    }
}

} // namespace

std::vector<IdentityInstance> expand(IdentityId id, const ParamRanges &ranges, const Truncation &tr,
                                     bool admissible_only)
{
    const auto &entry = info(id);
    for (const auto &[name, range] : ranges) {
        if (std::find(entry.params.begin(), entry.params.end(), name) == entry.params.end()) {
            throw InvalidParams(std::string(entry.name) + ": unknown parameter '" + name + "'");
        }
    }
    std::vector<IdentityInstance> out;
    Params current;
    product(entry, ranges, 0, current, tr, admissible_only, out);
    return out;
}

std::vector<VerificationResult> verify_all(const std::vector<IdentityInstance> &instances, int jobs)
{
    std::vector<VerificationResult> results(instances.size());
    const auto count = static_cast<long>(instances.size());
#ifdef _OPENMP
    const int width = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(width)
    for (long i = 0; i < count; ++i) {
        results[static_cast<std::size_t>(i)] = verify_recording(instances[static_cast<std::size_t>(i)]);
    }
#else
    (void)jobs;
    for (long i = 0; i < count; ++i) {
        results[static_cast<std::size_t>(i)] = verify_recording(instances[static_cast<std::size_t>(i)]);
    }
#endif
    return results;
}

std::vector<VerificationResult> sweep(IdentityId id, const ParamRanges &ranges, const Truncation &tr,
                                      const SweepOptions &opts)
{
    return verify_all(expand(id, ranges, tr, opts.admissible_only), opts.jobs);
}

} // namespace qdiv
