#include "fockdual/instance_spec.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "fockdual/builtins.hpp"

namespace fockdual {

ParseError::ParseError(int line_no, std::string field_name, const std::string& message)
    : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ", field '" + field_name + "': " + message
                                     : "field '" + field_name + "': " + message),
      line(line_no),
      field(std::move(field_name)) {}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    const char* first = s.data();
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    return out;
}

std::vector<std::string> words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

struct Line {
    int no;
    std::string key;    // first word of the left-hand side
    std::vector<std::string> index;  // remaining words of the left-hand side
    std::string value;
};

struct Section {
    std::string name;
    int header_line = 0;
    std::vector<Line> lines;

    const Line* find(const std::string& key) const {
        const Line* hit = nullptr;
        for (const auto& l : lines)
            if (l.key == key && l.index.empty()) hit = &l;
        return hit;
    }
    const Line& require(const std::string& key) const {
        if (const Line* l = find(key)) return *l;
        throw ParseError(header_line, key, "missing in section '" + name + "'");
    }
};

int to_int(const Line& l, const std::string& text, const std::string& field) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError(l.no, field, "expected an integer, got '" + text + "'");
    return v;
}

double to_double(const Line& l, const std::string& text, const std::string& field) {
    double v = 0;
    if (!parse_double(text, v)) throw ParseError(l.no, field, "expected a number, got '" + text + "'");
    return v;
}

std::vector<int> int_list(const Line& l) {
    std::vector<int> out;
    for (const auto& w : words(l.value)) out.push_back(to_int(l, w, l.key));
    if (out.empty()) throw ParseError(l.no, l.key, "empty list");
    return out;
}

std::vector<double> double_list(const Line& l) {
    std::vector<double> out;
    for (const auto& w : words(l.value)) out.push_back(to_double(l, w, l.key));
    return out;
}

cplx to_complex(const Line& l) {
    try {
        return parse_complex(l.value);
    } catch (const std::invalid_argument& e) {
        throw ParseError(l.no, l.key, e.what());
    }
}

Algebra parse_algebra(const Section& s) {
    const Line& b = s.require("blocks");
    const std::vector<int> dims = int_list(b);
    std::vector<double> weights;
    if (const Line* w = s.find("weights")) {
        weights = double_list(*w);
        if (weights.size() != dims.size())
            throw ParseError(w->no, "weights", "expected " + std::to_string(dims.size()) + " weights");
    }
    try {
        return Algebra(dims, weights);
    } catch (const std::invalid_argument& e) {
        throw ParseError(b.no, "blocks", e.what());
    }
}

Bimodule parse_automorphism(const Section& s) {
    const Algebra alg = parse_algebra(s);
    const int nb = alg.num_blocks();
    std::vector<int> perm(nb);
    for (int b = 0; b < nb; ++b) perm[b] = b;
    if (const Line* p = s.find("permutation")) perm = int_list(*p);
    std::vector<Mat> unitaries;
    for (int b = 0; b < nb; ++b) unitaries.push_back(Mat::Identity(alg.block_dim(b), alg.block_dim(b)));
    for (const auto& l : s.lines) {
        if (l.key != "unitary") continue;
        if (l.index.size() != 1) throw ParseError(l.no, "unitary", "expected 'unitary <block> = <rows>'");
        const int b = to_int(l, l.index[0], "unitary");
        if (b < 0 || b >= nb) throw ParseError(l.no, "unitary", "block index out of range");
        const int n = alg.block_dim(b);
        const auto rows = split(l.value, ';');
        if (static_cast<int>(rows.size()) != n)
            throw ParseError(l.no, "unitary", "expected " + std::to_string(n) + " rows");
        Mat u(n, n);
        for (int i = 0; i < n; ++i) {
            const auto entries = words(rows[i]);
            if (static_cast<int>(entries.size()) != n)
                throw ParseError(l.no, "unitary", "row " + std::to_string(i) + " needs " + std::to_string(n) + " entries");
            for (int j = 0; j < n; ++j) {
                try {
                    u(i, j) = parse_complex(entries[j]);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(l.no, "unitary", e.what());
                }
            }
        }
        unitaries[b] = u;
    }
    try {
        return from_automorphism(alg, Automorphism(alg, perm, unitaries));
    } catch (const std::invalid_argument& e) {
        throw ParseError(s.header_line, "automorphism", e.what());
    }
}

Bimodule parse_explicit(const Section& s) {
    const Algebra alg = parse_algebra(s);
    const Line& dl = s.require("dim");
    const int dim = to_int(dl, dl.value, "dim");
    if (dim < 0) throw ParseError(dl.no, "dim", "must be non-negative");
    const int da = alg.dim();
    std::vector<Mat> left(da, Mat::Zero(dim, dim)), right = left, ip_left = left, ip_right = left;
    std::map<std::string, std::vector<Mat>*> tensors = {
        {"left", &left}, {"right", &right}, {"ip_left", &ip_left}, {"ip_right", &ip_right}};
    for (const auto& l : s.lines) {
        auto it = tensors.find(l.key);
        if (it == tensors.end()) continue;
        if (l.index.size() != 3) throw ParseError(l.no, l.key, "expected three indices");
        const int p = to_int(l, l.index[0], l.key), q = to_int(l, l.index[1], l.key), r = to_int(l, l.index[2], l.key);
        const bool action = l.key == "left" || l.key == "right";
        // actions: (basis_in, basis_alg, basis_out); inner products: (basis_in, basis_in, basis_alg)
        const int k = action ? q : r;
        if (k < 0 || k >= da) throw ParseError(l.no, l.key, "algebra index out of range [0," + std::to_string(da) + ")");
        const int i = p, j = action ? r : q;
        if (i < 0 || i >= dim || j < 0 || j >= dim)
            throw ParseError(l.no, l.key, "module index out of range [0," + std::to_string(dim) + ")");
        if (action)
            (*it->second)[k](j, i) = to_complex(l);
        else
            (*it->second)[k](i, j) = to_complex(l);
    }
    return Bimodule(alg, dim, left, right, ip_left, ip_right);
}

}  // namespace

cplx parse_complex(const std::string& raw) {
    std::string s;
    std::copy_if(raw.begin(), raw.end(), std::back_inserter(s), [](char c) { return c != ' ' && c != '\t'; });
    auto fail = [&]() { return std::invalid_argument("malformed complex literal '" + raw + "'"); };
    if (s.empty()) throw fail();
    if (s.back() != 'i') {
        double re = 0;
        if (!parse_double(s, re)) throw fail();
        return {re, 0.0};
    }
    s.pop_back();
    // split at the last sign that is not a leading sign or part of an exponent
    std::size_t cut = std::string::npos;
    for (std::size_t p = s.size(); p-- > 1;)
        if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
            cut = p;
            break;
        }
    const std::string re_text = cut == std::string::npos ? "" : s.substr(0, cut);
    std::string im_text = cut == std::string::npos ? s : s.substr(cut);
    if (im_text.empty() || im_text == "+") im_text = "1";
    if (im_text == "-") im_text = "-1";
    double re = 0, im = 0;
    if (!re_text.empty() && !parse_double(re_text, re)) throw fail();
    if (!parse_double(im_text, im)) throw fail();
    return {re, im};
}

InstanceSpec parse_instance(const std::string& text) {
    Section top{"", 0, {}};
    std::vector<Section> sections;
    std::istringstream in(text);
    std::string raw;
    for (int no = 1; std::getline(in, raw); ++no) {
        const std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(no, "section", "unterminated header");
            const auto w = words(line.substr(1, line.size() - 2));
            if (w.size() != 2 || w[0] != "bimodule") throw ParseError(no, "section", "expected '[bimodule NAME]'");
            for (const auto& s : sections)
                if (s.name == w[1]) throw ParseError(no, "section", "duplicate bimodule '" + w[1] + "'");
            sections.push_back({w[1], no, {}});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(no, trim(line), "expected 'key = value'");
        auto lhs = words(line.substr(0, eq));
        if (lhs.empty()) throw ParseError(no, "", "missing key");
        Line l{no, lhs[0], {lhs.begin() + 1, lhs.end()}, trim(line.substr(eq + 1))};
        if (l.value.empty()) throw ParseError(no, l.key, "missing value");
        (sections.empty() ? top : sections.back()).lines.push_back(std::move(l));
    }

    static const std::vector<std::string> top_keys = {"window", "tol", "quadrature", "seed", "suites", "target"};
    std::optional<int> window, quadrature;
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> suites;
    std::string target;
    for (const auto& l : top.lines) {
        if (std::find(top_keys.begin(), top_keys.end(), l.key) == top_keys.end() || !l.index.empty())
            throw ParseError(l.no, l.key, "unknown setting");
        if (l.key == "window") {
            window = to_int(l, l.value, l.key);
            if (*window < 1) throw ParseError(l.no, l.key, "window radius must be at least 1");
        } else if (l.key == "quadrature") {
            quadrature = to_int(l, l.value, l.key);
            if (*quadrature < 1) throw ParseError(l.no, l.key, "must be positive");
        } else if (l.key == "tol") {
            tol = to_double(l, l.value, l.key);
            if (!(*tol > 0)) throw ParseError(l.no, l.key, "must be positive");
        } else if (l.key == "seed") {
            std::uint64_t v = 0;
            const auto [ptr, ec] = std::from_chars(l.value.data(), l.value.data() + l.value.size(), v);
            if (ec != std::errc() || ptr != l.value.data() + l.value.size())
                throw ParseError(l.no, l.key, "expected a non-negative integer");
            seed = v;
        } else if (l.key == "suites") {
            for (const auto& s : split(l.value, ','))
                if (!s.empty()) suites.push_back(s);
        } else {
            target = l.value;
        }
    }

    std::map<std::string, Bimodule> built;
    for (const auto& s : sections) {
        static const std::vector<std::string> kinds = {"builtin", "automorphism", "explicit", "dual", "tensor"};
        const Line& k = s.require("kind");
        if (std::find(kinds.begin(), kinds.end(), k.value) == kinds.end())
            throw ParseError(k.no, "kind", "unknown kind '" + k.value + "'");
        auto lookup = [&](const std::string& key) -> const Bimodule& {
            const Line& l = s.require(key);
            auto it = built.find(l.value);
            if (it == built.end()) throw ParseError(l.no, key, "no earlier bimodule named '" + l.value + "'");
            return it->second;
        };
        std::optional<Bimodule> b;
        if (k.value == "builtin") {
            const Line& n = s.require("name");
            try {
                b = builtins::by_name(n.value);
            } catch (const std::invalid_argument& e) {
                throw ParseError(n.no, "name", e.what());
            }
        } else if (k.value == "automorphism") {
            b = parse_automorphism(s);
        } else if (k.value == "explicit") {
            b = parse_explicit(s);
        } else if (k.value == "dual") {
            b = dual(lookup("of"), tol.value_or(1e-9), false);
        } else {
            const Bimodule& l = lookup("left");
            const Bimodule& r = lookup("right");
            if (!(l.algebra() == r.algebra()))
                throw ParseError(s.header_line, "tensor", "factors live over different algebras");
            TensorOptions opts;
            opts.tol = tol.value_or(1e-9);
            b = tensor(l, r, opts).module;
        }
        built.emplace(s.name, std::move(*b));
    }

    std::optional<Bimodule> chosen;
    if (target.rfind("builtin:", 0) == 0) {
        try {
            chosen = builtins::by_name(target.substr(8));
        } catch (const std::invalid_argument& e) {
            throw ParseError(0, "target", e.what());
        }
    } else if (!target.empty()) {
        auto it = built.find(target);
        if (it == built.end()) throw ParseError(0, "target", "no bimodule named '" + target + "'");
        chosen = it->second;
    } else if (!sections.empty()) {
        target = sections.back().name;
        chosen = built.at(target);
    } else {
        throw ParseError(0, "target", "no bimodule given");
    }
    return InstanceSpec{target, std::move(*chosen), window, tol, quadrature, seed, suites};
}

InstanceSpec load_instance(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError(0, "path", "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_instance(buf.str());
}

}  // namespace fockdual
