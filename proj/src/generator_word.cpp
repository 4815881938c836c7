#include "fockdual/generator_word.hpp"

#include <sstream>

namespace fockdual {

namespace {

bool same_payload(const Letter& a, const Letter& b) {
    if (a.payload.index() != b.payload.index()) return false;
    if (const auto* pa = std::get_if<AlgElem>(&a.payload)) {
        const auto& pb = std::get<AlgElem>(b.payload);
        return pa->parent() == pb.parent() && max_abs_diff(*pa, pb) == 0.0;
    }
    const auto& xa = std::get<Coords>(a.payload);
    const auto& xb = std::get<Coords>(b.payload);
    return xa.size() == xb.size() && (xa.size() == 0 || (xa - xb).cwiseAbs().maxCoeff() == 0.0);
}

Letter shift_letter(Letter l, int k) {
    l.degree -= k;
    return l;
}

Letter adjoint_letter(const Letter& l) {
    switch (l.kind) {
        case Letter::Kind::L: return Letter::L(std::get<AlgElem>(l.payload).adjoint(), l.degree);
        case Letter::Kind::T: return Letter::Tstar(std::get<Coords>(l.payload), l.degree);
        case Letter::Kind::Tstar: return Letter::T(std::get<Coords>(l.payload), l.degree);
    }
    return l;
}

}  // namespace

bool Letter::operator==(const Letter& o) const { return kind == o.kind && degree == o.degree && same_payload(*this, o); }

std::string Letter::describe() const {
    std::ostringstream s;
    switch (kind) {
        case Kind::L: s << "L"; break;
        case Kind::T: s << "T"; break;
        case Kind::Tstar: s << "T*"; break;
    }
    s << "(" << degree << ")";
    return s.str();
}

GeneratorWord GeneratorWord::operator+(const GeneratorWord& o) const {
    std::vector<Monomial> t = terms_;
    t.insert(t.end(), o.terms_.begin(), o.terms_.end());
    return GeneratorWord(std::move(t));
}

GeneratorWord GeneratorWord::operator*(const GeneratorWord& o) const {
    std::vector<Monomial> t;
    t.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Monomial m{a.coeff * b.coeff, a.letters};
            m.letters.insert(m.letters.end(), b.letters.begin(), b.letters.end());
            t.push_back(std::move(m));
        }
    return GeneratorWord(std::move(t));
}

GeneratorWord GeneratorWord::operator*(cplx s) const {
    GeneratorWord out = *this;
    for (auto& m : out.terms_) m.coeff *= s;
    return out;
}

GeneratorWord GeneratorWord::adjoint() const {
    std::vector<Monomial> t;
    for (const auto& m : terms_) {
        Monomial a{std::conj(m.coeff), {}};
        for (auto it = m.letters.rbegin(); it != m.letters.rend(); ++it) a.letters.push_back(adjoint_letter(*it));
        t.push_back(std::move(a));
    }
    return GeneratorWord(std::move(t));
}

GeneratorWord GeneratorWord::shifted(int k) const {
    GeneratorWord out = *this;
    for (auto& m : out.terms_)
        for (auto& l : m.letters) l = shift_letter(l, k);
    return out;
}

std::string GeneratorWord::describe() const {
    std::ostringstream s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) s << " + ";
        s << terms_[i].coeff;
        for (const auto& l : terms_[i].letters) s << " " << l.describe();
    }
    return s.str();
}

GeneratorWord sigma(const GeneratorWord& w) { return w.shifted(1); }
GeneratorWord sigma_inverse(const GeneratorWord& w) { return w.shifted(-1); }

GradedOp evaluate(const Window& w, const Letter& l) {
    switch (l.kind) {
        case Letter::Kind::L:
            return embed(w, left_action_op(w, std::get<AlgElem>(l.payload), l.degree), l.degree, l.degree);
        case Letter::Kind::T:
            return embed(w, creation(w, std::get<Coords>(l.payload), l.degree), l.degree, l.degree + 1);
        case Letter::Kind::Tstar:
            return embed(w, creation(w, std::get<Coords>(l.payload), l.degree).adjoint(), l.degree + 1, l.degree);
    }
    return w.zero_op();
}

GradedOp evaluate(const Window& w, const GeneratorWord& word) {
    GradedOp acc = w.zero_op();
    for (const auto& m : word.terms()) {
        if (m.letters.empty()) {
            acc = acc + w.identity_op() * m.coeff;
            continue;
        }
        GradedOp prod = evaluate(w, m.letters.front());
        for (std::size_t i = 1; i < m.letters.size(); ++i) prod = prod * evaluate(w, m.letters[i]);
        acc = acc + prod * m.coeff;
    }
    return acc;
}

GeneratorWord random_word(const Bimodule& x, int lo, int hi, int terms, int length, Rng& rng) {
    std::uniform_int_distribution<int> pick_deg(lo, hi);
    std::uniform_int_distribution<int> pick_len(1, length);
    std::uniform_int_distribution<int> pick_kind(0, 2);
    const Algebra& alg = x.algebra();

    auto unit_elem = [&] {
        AlgElem a = random_element(alg, rng);
        const double n = alg_norm(a);
        return n > 0 ? a * cplx(1.0 / n) : a;
    };
    auto unit_coords = [&] {
        Coords c = x.random(rng);
        const double n = x.norm(c);
        return n > 0 ? Coords(c / n) : c;
    };

    std::vector<Monomial> out;
    for (int t = 0; t < terms; ++t) {
        Monomial m{random_complex(rng), {}};
        int cur = pick_deg(rng);
        const int len = pick_len(rng);
        std::vector<Letter> rev;
        while (static_cast<int>(rev.size()) < len) {
            const int k = pick_kind(rng);
            if (k == 0 && cur >= lo && cur <= hi) {
                rev.push_back(Letter::L(unit_elem(), cur));
            } else if (k == 1 && cur >= lo && cur <= hi) {
                rev.push_back(Letter::T(unit_coords(), cur));
                ++cur;
            } else if (k == 2 && cur - 1 >= lo && cur - 1 <= hi) {
                rev.push_back(Letter::Tstar(unit_coords(), cur - 1));
                --cur;
            }
        }
        m.letters.assign(rev.rbegin(), rev.rend());
        out.push_back(std::move(m));
    }
    return GeneratorWord(std::move(out));
}

}  // namespace fockdual
