#include "pdslab/quadratic_form.hpp"

#include <stdexcept>

namespace pdslab {

QuadraticForm::QuadraticForm(int ell, int j) : ell_(ell), j_(j) {
    if (ell < 1 || ell > 15) throw std::invalid_argument("QuadraticForm: ell out of range");
    if (j < 0 || j > ell) throw std::invalid_argument("QuadraticForm: need 0 <= j <= ell");
}

void QuadraticForm::check_dimension(std::span<const Gf4> v) const {
    if (static_cast<int>(v.size()) != dimension())
        throw std::invalid_argument("QuadraticForm: vector length must be 2*ell");
}

Gf4 QuadraticForm::evaluate(std::span<const Gf4> v) const {
    check_dimension(v);
    Gf4 acc;
    for (int i = 0; i < ell_; ++i) {
        const Gf4 x = v[2 * i], y = v[2 * i + 1];
        acc += x * y;
        if (i < j_) acc += Gf4::alpha() * x.square() + y.square();
    }
    return acc;
}

Gf4 QuadraticForm::evaluate_packed(std::uint64_t codes) const {
    Gf4 acc;
    for (int i = 0; i < ell_; ++i) {
        const Gf4 x(static_cast<std::uint8_t>((codes >> (4 * i)) & 3u));
        const Gf4 y(static_cast<std::uint8_t>((codes >> (4 * i + 2)) & 3u));
        acc += x * y;
        if (i < j_) acc += Gf4::alpha() * x.square() + y.square();
    }
    return acc;
}

Gf4 QuadraticForm::bilinear(std::span<const Gf4> u, std::span<const Gf4> v) const {
    check_dimension(u);
    check_dimension(v);
    FieldVector sum(dimension());
    for (int i = 0; i < dimension(); ++i) sum[i] = u[i] + v[i];
    return evaluate(sum) + evaluate(u) + evaluate(v);  // char 2: subtraction is addition
}

std::uint64_t QuadraticForm::zero_count() const {
    std::uint64_t count = 0;
    for (std::uint64_t idx = 0; idx < domain_size(); ++idx)
        if (evaluate_packed(idx).is_zero()) ++count;
    return count;
}

std::uint64_t QuadraticForm::restricted_zero_count() const {
    const std::uint64_t slice = domain_size() >> 2;  // x1 fixed to 0
    std::uint64_t count = 0;
    for (std::uint64_t rest = 0; rest < slice; ++rest)
        if (evaluate_packed(rest << 2).is_zero()) ++count;
    return count;
}

QuadraticForm::Type QuadraticForm::type() const {
    const Type by_parity = (j_ % 2 == 1) ? Type::elliptic : Type::hyperbolic;
    const std::uint64_t half = std::uint64_t{1} << (4 * ell_ - 2);      // 4^{2l-1}
    const std::uint64_t swing = 3 * (std::uint64_t{1} << (2 * ell_ - 2));  // 3*4^{l-1}
    const std::uint64_t expected = (by_parity == Type::elliptic) ? half - swing : half + swing;
    if (zero_count() != expected)
        throw std::logic_error("QuadraticForm::type: parity rule and zero count disagree");
    return by_parity;
}

FieldVector QuadraticForm::equivalence_map(std::span<const Gf4> v) const {
    check_dimension(v);
    if (j_ < 2) throw std::domain_error("equivalence_map: needs j >= 2");
    FieldVector out(v.begin(), v.end());
    const int base = 2 * j_ - 4;  // 0-based index of x_{2j-3}
    const Gf4 a = v[base], b = v[base + 1], c = v[base + 2], d = v[base + 3];
    out[base] = a + c + d;
    out[base + 1] = Gf4::alpha() * a + b;
    out[base + 2] = c + d;
    out[base + 3] = Gf4::alpha() * a + b + d;
    return out;
}

FieldVector QuadraticForm::equivalence_map_inverse(std::span<const Gf4> v) const {
    check_dimension(v);
    if (j_ < 2) throw std::domain_error("equivalence_map_inverse: needs j >= 2");
    FieldVector out(v.begin(), v.end());
    const int base = 2 * j_ - 4;
    const Gf4 y1 = v[base], y2 = v[base + 1], y3 = v[base + 2], y4 = v[base + 3];
    const Gf4 a = y1 + y3;
    out[base] = a;
    out[base + 1] = Gf4::alpha() * a + y2;
    out[base + 2] = y2 + y3 + y4;
    out[base + 3] = y2 + y4;
    return out;
}

FieldVector QuadraticForm::pair_flip(std::span<const Gf4> v, int block) const {
    check_dimension(v);
    if (block < 1 || block > j_) throw std::domain_error("pair_flip: needs 1 <= block <= j");
    FieldVector out(v.begin(), v.end());
    out[2 * block - 1] = v[2 * block - 2] + v[2 * block - 1];
    return out;
}

} // namespace pdslab
