/**
 * @file expr.hpp
 * @brief Text expressions over the named families.
 *
 * Grammar (whitespace insignificant):
 *
 *     expr    := term (('+' | '-') term)*
 *     term    := factor ('*' factor)*
 *     factor  := ['-'] primary
 *     primary := NUMBER | atom | '(' expr ')'
 *     atom    := e[a1,…]                 elementary e_α
 *              | p[a1,…]                 power sum p_α
 *              | g[k;a1,…]               generator γ^k(x^α)×⋄^{d−k}
 *              | m{(e1,…)^n, …} | m{}    basis element by its index
 *     NUMBER  := INT ('/' POSINT)?
 *
 * to_string(GammaElement) emits canonical m{…} sums that re-parse to the
 * same element, so parse/format round-trips are stable.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msym/element.hpp"

namespace msym {

struct ExprNode {
    enum class Kind {
        Sum,             ///< children added left to right
        Product,         ///< children multiplied
        Negate,          ///< single child negated
        Number,          ///< rational literal
        ElementaryAtom,  ///< e[…]   with exponents in ints
        PowerSumAtom,    ///< p[…]   with exponents in ints
        GeneratorAtom,   ///< g[k;…] with k and exponents in ints
        BasisAtom,       ///< m{…}   with the index in index
    };

    Kind kind = Kind::Number;
    std::vector<ExprNode> children;
    mpq_class number = 0;
    ExpVec ints;
    int k = 0;
    MultiIndex index;
};

/// Parse the full input as one expression; throws std::invalid_argument with
/// the offending position on malformed input.
ExprNode parse_expression(const std::string& text);

/// Evaluate against ambient (d, r, ring); atom exponent lists must have
/// length r ("arity mismatch" otherwise).
GammaElement evaluate(const ExprNode& node, int d, int r, RingSpec ring);

/// The variable count implied by the atoms (exponent-list lengths), or
/// nullopt when the expression contains no atom carrying one.  Conflicting
/// lengths throw "arity mismatch".
std::optional<int> infer_arity(const ExprNode& node);

}  // namespace msym
