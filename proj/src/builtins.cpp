#include "fockdual/builtins.hpp"

namespace fockdual::builtins {

namespace {

Mat scalar_mat(cplx v) {
    Mat m(1, 1);
    m(0, 0) = v;
    return m;
}

}  // namespace

Bimodule scalar() { return trivial_bimodule(Algebra({1})); }

Automorphism swap_automorphism() {
    const Algebra a({1, 1});
    return Automorphism(a, {1, 0}, {scalar_mat(1.0), scalar_mat(1.0)});
}

Automorphism matrix_automorphism() {
    const Algebra a({2});
    Mat u = Mat::Zero(2, 2);
    u(0, 0) = 1.0;
    u(1, 1) = cplx(0.0, 1.0);
    return Automorphism(a, {0}, {u});
}

Bimodule swap() { return from_automorphism(swap_automorphism().algebra(), swap_automorphism()); }

Bimodule matrix() { return from_automorphism(matrix_automorphism().algebra(), matrix_automorphism()); }

Bimodule half() {
    const Algebra a({1, 1});
    const Mat one = scalar_mat(1.0), zero = scalar_mat(0.0);
    return Bimodule(a, 1, {one, zero}, {zero, one}, {one, zero}, {zero, one});
}

Bimodule scaled_left_product() {
    const Bimodule s = scalar();
    std::vector<Mat> il;
    for (const auto& m : s.ip_left_tensor()) il.push_back(2.0 * m);
    return Bimodule(s.algebra(), s.dim(), s.left(), s.right(), std::move(il), s.ip_right_tensor());
}

Bimodule with_scaled_right_action(const Bimodule& x, double factor) {
    std::vector<Mat> r;
    for (const auto& m : x.right()) r.push_back(factor * m);
    return Bimodule(x.algebra(), x.dim(), x.left(), std::move(r), x.ip_left_tensor(), x.ip_right_tensor());
}

const std::vector<std::string>& names() {
    static const std::vector<std::string> n{"scalar", "swap", "matrix", "half"};
    return n;
}

Bimodule by_name(const std::string& name) {
    if (name == "scalar") return scalar();
    if (name == "swap") return swap();
    if (name == "matrix") return matrix();
    if (name == "half") return half();
    throw std::invalid_argument("unknown builtin bimodule '" + name + "'");
}

}  // namespace fockdual::builtins
