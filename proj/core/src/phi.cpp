#include "fdrc/phi.hpp"

namespace fdrc {

Mat phi_expand(std::span<const felt> v, const Basis& beta) {
    const FieldPtr& ext = beta.field();
    const std::size_t m = ext->degree();
    Mat out(ext->base(), m, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] >= ext->size()) throw PreconditionError("vector entry out of field range");
        const auto coords = beta.coordinates(v[j]);
        for (std::size_t i = 0; i < m; ++i) out.set(i, j, coords[i]);
    }
    return out;
}

std::vector<felt> phi_compress(const Mat& a, const Basis& beta) {
    const FieldPtr& ext = beta.field();
    if (a.rows() != ext->degree())
        throw PreconditionError("matrix height does not match the extension degree");
    if (!a.field()->same(*ext->base()))
        throw PreconditionError("matrix field does not match the basis base field");
    std::vector<felt> out(a.cols());
    std::vector<felt> col(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) col[i] = a(i, j);
        out[j] = beta.combine(col);
    }
    return out;
}

bool linearly_independent_over_base(std::span<const felt> s, const FieldPtr& ext) {
    if (s.empty()) return true;
    if (s.size() > ext->degree()) return false;
    const Basis beta = Basis::polynomial(ext);
    return rank(phi_expand(s, beta)) == s.size();
}

felt find_independent(std::span<const felt> s, const FieldPtr& ext) {
    if (s.size() >= ext->degree())
        throw PreconditionError("the given elements already span the field");
    const Basis beta = Basis::polynomial(ext);
    std::vector<felt> probe(s.begin(), s.end());
    probe.push_back(0);
    for (std::uint64_t x = 0; x < ext->size(); ++x) {
        probe.back() = felt(x);
        if (rank(phi_expand(probe, beta)) == probe.size()) return felt(x);
    }
    throw PreconditionError("no independent element found");  // unreachable
}

}  // namespace fdrc
