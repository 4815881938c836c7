#pragma once

// Instance files for the verify tool.
//
//   # comment
//   window = 3            top-level settings, all optional
//   tol = 1e-9
//   quadrature = 14
//   seed = 7
//   suites = axioms, sigma
//   target = X            bimodule to verify; defaults to the last section
//
//   [bimodule X]
//   kind = builtin | automorphism | explicit | dual | tensor
//
// builtin:       name = scalar | swap | matrix | half
// automorphism:  blocks = 1 1, weights = 1 1 (optional), permutation = 1 0,
//                unitary <b> = <row>; <row>   (default identity)
// explicit:      blocks, weights, dim, then structure constants indexed
//                (basis_in, basis_alg, basis_out) on the orthonormal algebra basis:
//                  left <i> <k> <o> = v       o-th coordinate of f_k . e_i
//                  right <i> <k> <o> = v      o-th coordinate of e_i . f_k
//                  ip_left <i> <j> <k> = v    k-th coordinate of <e_i, e_j>_L
//                  ip_right <i> <j> <k> = v   k-th coordinate of <e_i, e_j>_R
// dual:          of = <name>
// tensor:        left = <name>, right = <name>
//
// `target = builtin:<name>` skips sections entirely. Numbers are complex
// literals: 1, -0.5, 2i, -i, 1+2i, 3e-1-4.5e2i.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fockdual/bimodule.hpp"

namespace fockdual {

struct ParseError : std::runtime_error {
    ParseError(int line, std::string field, const std::string& message);
    int line;  // 0 when the error is not tied to a line
    std::string field;
};

struct InstanceSpec {
    std::string target;
    Bimodule bimodule;
    std::optional<int> window;
    std::optional<double> tol;
    std::optional<int> quadrature;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> suites;
};

/// Throws std::invalid_argument unless the whole string is one literal.
cplx parse_complex(const std::string& text);

InstanceSpec parse_instance(const std::string& text);
/// Throws ParseError (line 0, field "path") when the file cannot be read.
InstanceSpec load_instance(const std::string& path);

}  // namespace fockdual
