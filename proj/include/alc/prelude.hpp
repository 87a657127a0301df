#pragma once

#include "alc/parser.hpp"
#include "alc/rewrite.hpp"
#include "alc/term.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alc {

// qbool = M T -> (M T -> M T)
Type qbool_type();
// Parser options knowing the qbool alias.
ParseOptions prelude_parse_options();

struct PreludeEntry {
    std::string name;
    Term term;
    // Documented type; empty for the literal variants that do not typecheck.
    std::optional<Type> type;
    std::string note;
};

// Named closed terms available to files through "#use prelude".
const std::vector<PreludeEntry>& prelude();
const PreludeEntry* prelude_lookup(const std::string& name);
// Replace free occurrences of prelude names.
Term with_prelude(const Term& t);

// alpha|0> + beta|1> as \x y. [alpha*!x + beta*!y]
Term ket(const Scalar& alpha, const Scalar& beta);
Term ttq();
Term ffq();
Term hadamard();
// Conjugation of a density term by the Hadamard gate.
Term hadamard_dens();
// Density term of alpha|0> + beta|1>.
Term dens(const Scalar& alpha, const Scalar& beta);
// Expected result of measuring dens(alpha, beta): the diagonal.
Term diagonal(const Scalar& alpha, const Scalar& beta);
Term measure_p();
// As printed; does not reach the diagonal.
Term measure_p_literal();

// Y(\x:M B. [b + !x])
Term yb(const Term& b, const Type& b_type);

Term exp_term();
Term exp_literal();
Term pow_term();
Term pow_literal();
// [sum_i beta_i * n_i] : M int
Term polynomial(const std::vector<std::pair<Scalar, unsigned>>& terms);

struct BrokenDemo {
    Mode mode = Mode::Strict;
    Term start = Term::star();
    // strict: paths to zero and to b. weak: paths to the branch endpoints
    // 0*Y_b and b + 0*Y_b.
    Term end_a = Term::star();
    Term end_b = Term::star();
    std::optional<std::vector<Reduct>> branch_a;
    std::optional<std::vector<Reduct>> branch_b;
    // Whether the two endpoints have a common reduct.
    JoinResult join;
    // strict: both branches found and not joinable. weak: endpoints joined.
    bool expected() const;
    std::string str() const;
};

BrokenDemo broken_demo(const Term& b, const Type& b_type, Mode mode, std::size_t fuel);

class UnsupportedConstruct : public std::runtime_error {
public:
    explicit UnsupportedConstruct(const std::string& what) : std::runtime_error(what) {}
};

// Embedding of the call-by-name algebraic calculus.
Term enc_alg(const Term& t);
Type enc_alg_type(const Type& a);
// Embedding of the call-by-value linear-algebraic calculus.
Term enc_lin(const Term& t);
Type enc_lin_type(const Type& a);

}  // namespace alc
