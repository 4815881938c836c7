#pragma once

// Formal linear combinations of products of the generators L^n_a, T^n_x and
// (T^n_x)^*, evaluated on a Window on demand.

#include <string>
#include <variant>
#include <vector>

#include "fockdual/fock_window.hpp"

namespace fockdual {

struct Letter {
    enum class Kind { L, T, Tstar };

    Kind kind = Kind::L;
    int degree = 0;
    /// AlgElem for L, coordinates of x (caller basis of X) for T and Tstar.
    std::variant<AlgElem, Coords> payload;

    static Letter L(const AlgElem& a, int n) { return {Kind::L, n, a}; }
    static Letter T(const Coords& x, int n) { return {Kind::T, n, x}; }
    static Letter Tstar(const Coords& x, int n) { return {Kind::Tstar, n, x}; }

    /// Degree the letter reads from and the degree it writes to.
    int source() const { return kind == Kind::Tstar ? degree + 1 : degree; }
    int target() const { return kind == Kind::T ? degree + 1 : degree; }

    bool operator==(const Letter& o) const;
    std::string describe() const;
};

/// coeff * letters[0] letters[1] ... ; the last letter acts first.
struct Monomial {
    cplx coeff{1.0, 0.0};
    std::vector<Letter> letters;

    bool operator==(const Monomial& o) const { return coeff == o.coeff && letters == o.letters; }
};

class GeneratorWord {
public:
    GeneratorWord() = default;
    explicit GeneratorWord(Letter l) { terms_.push_back({cplx(1.0), {std::move(l)}}); }
    explicit GeneratorWord(std::vector<Monomial> terms) : terms_(std::move(terms)) {}

    const std::vector<Monomial>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    GeneratorWord operator+(const GeneratorWord& o) const;
    GeneratorWord operator*(const GeneratorWord& o) const;
    GeneratorWord operator*(cplx s) const;

    GeneratorWord adjoint() const;
    /// Every degree index moved by -k; shifted(1) is sigma.
    GeneratorWord shifted(int k) const;

    /// Exact comparison of coefficients, letter kinds, degrees and payloads.
    bool operator==(const GeneratorWord& o) const { return terms_ == o.terms_; }

    std::string describe() const;

private:
    std::vector<Monomial> terms_;
};

inline GeneratorWord operator*(cplx s, const GeneratorWord& w) { return w * s; }

/// sigma(L(a,n)) = L(a,n-1), sigma(T(x,n)) = T(x,n-1), extended multiplicatively.
GeneratorWord sigma(const GeneratorWord& w);
GeneratorWord sigma_inverse(const GeneratorWord& w);

/// Throws WindowEdgeError if a letter touches a degree outside the window.
GradedOp evaluate(const Window& w, const GeneratorWord& word);
GradedOp evaluate(const Window& w, const Letter& l);

/// A sum of up to `terms` products of up to `length` letters whose degrees chain,
/// with every letter degree in [lo, hi]. Payloads are normalized to norm 1.
GeneratorWord random_word(const Bimodule& x, int lo, int hi, int terms, int length, Rng& rng);

}  // namespace fockdual
