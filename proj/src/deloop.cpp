#include "partot/deloop.hpp"

#include "partot/errors.hpp"

#include <algorithm>

namespace partot {

namespace {

constexpr const char* kDisclaimer =
    "signatures certify reduced homology only; the lifting argument additionally needs simple connectivity "
    "and mapping-space connectivity, which are not checked";

} // namespace

InclusionReport analyze_inclusion(const PosetInclusion& inc) {
    InclusionReport report;
    report.disclaimer = kDisclaimer;

    // The complement must be upward closed: no element of it below one of C.
    const FinPoset& d = inc.ambient();
    for (std::size_t a : inc.complement_indices())
        for (std::size_t c : inc.sub_indices())
            if (d.less(a, c))
                throw PreconditionError("complement element " + d.element(a).to_string() + " lies below " +
                                        d.element(c).to_string() + "; C is not downward closed");

    const DiagramOfComplexes t = t_functor(inc);
    bool sub_ok = true;
    std::optional<int> p;
    bool uniform = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
        PointwiseSignature ps{d.element(i), inc.in_sub(i), wedge_signature(t.values[i])};
        if (ps.in_sub) {
            if (!ps.signature || !ps.signature->is_contractible()) {
                sub_ok = false;
                report.diagnostics.push_back("T(" + ps.element.to_string() + ") has nonzero reduced homology");
            }
        } else if (!ps.signature) {
            uniform = false;
            report.diagnostics.push_back("T(" + ps.element.to_string() + ") is not homologically a wedge of spheres");
        } else if (!ps.signature->is_contractible()) {
            // Contractible values are wedges of p-spheres for every p.
            const int dim = static_cast<int>(ps.signature->sphere_dim);
            if (p && *p != dim) {
                uniform = false;
                report.diagnostics.push_back("T(" + ps.element.to_string() + ") has spheres of dimension " +
                                             std::to_string(dim) + ", expected " + std::to_string(*p));
            }
            if (!p) p = dim;
        }
        report.pointwise.push_back(std::move(ps));
    }

    const auto complement = inc.complement();
    if (complement.empty()) {
        report.complement_dim = -1;
        if (sub_ok) report.unbounded = true;
        return report;
    }
    report.complement_dim = poset_dimension(complement);
    if (uniform) report.p = p;
    if (!p && uniform) report.diagnostics.push_back("T is contractible on every element; no sphere dimension");
    if (!sub_ok || !uniform || !p) return report;

    const int bound = *p - report.complement_dim;
    if (bound < 0) {
        report.diagnostics.push_back("complement dimension " + std::to_string(report.complement_dim) +
                                     " exceeds sphere dimension " + std::to_string(*p) + "; no delooping certified");
        return report;
    }
    report.d_max = bound;
    return report;
}

TotBound tot_truncation_bound(int n, int m) {
    if (n < 1 || m < n) throw InputError("tot bound needs 1 <= n <= m");
    if (m > 2 * n + 1) return {};
    return {2 * n - m + 2, true};
}

int cover_suspension_bound(int n, int r) {
    if (r < 1 || r > n) throw InputError("cover bound needs 1 <= r <= n");
    return 2 * r - n + 1;
}

bool unpointed_check(int n, int r) { return n <= 2 * r - 1; }

int suspension_functor_connectivity(int p_target, int d) {
    if (d < 0 || d > p_target) throw PreconditionError("suspension connectivity needs 0 <= d <= p");
    return p_target - d;
}

bool lifting_criterion(int dim_k, int connectivity) {
    if (dim_k < 0) throw InputError("dimension must be nonnegative");
    return dim_k <= connectivity;
}

PosetInclusion delta_model(int n, int m) {
    if (n < 0 || m < n) throw InputError("delta model needs 0 <= n <= m");
    const auto size = static_cast<std::size_t>(m + 1);
    FinPoset all = subset_poset(size, 1, size);
    const FinPoset low = subset_poset(size, 1, std::min(size, static_cast<std::size_t>(n + 1)));
    return PosetInclusion::full_subposet(std::move(all), low.elements());
}

} // namespace partot
