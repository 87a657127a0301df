#pragma once

#include "alc/rewrite.hpp"
#include "alc/typing.hpp"

#include <string>
#include <vector>

namespace alc {

enum class Verdict { Equal, NotEqual, Unknown };
const char* verdict_name(Verdict v);

struct EqVerdict {
    Verdict verdict = Verdict::Unknown;
    // Reduction of each side to normal form.
    Trace left;
    Trace right;
    // Forms compared after the eta, unit and canon post-passes.
    Term left_form = Term::star();
    Term right_form = Term::star();
    std::string reason;
};

// Sound, incomplete check of axiomatic equivalence at type ty. Both sides are
// normalized under full congruence, then eta-contraction, unit collapse at T,
// pair-eta and [!u] -> u are applied before comparing canonical forms.
// NotEqual only for distinct first-order answers at observable types.
// Throws TypeError when a side does not check at ty.
EqVerdict ax_equiv(const Context& ctx, const Term& s, const Term& t, const Type& ty, Mode mode,
                   std::size_t fuel = 10000);

// The post-passes alone, iterated with renormalization; exposed for tests.
Term post_normalize(const Context& ctx, const Term& t, Mode mode, std::size_t fuel);

struct AxiomInstance {
    std::string schema;
    Context ctx;
    Term lhs;
    Term rhs;
    Type type;
};

struct AxiomReport {
    std::size_t equal = 0;
    std::size_t unknown = 0;
    // NotEqual on a valid axiom instance: the procedure is unsound there.
    std::size_t refuted = 0;
    std::vector<std::string> log;
};

AxiomReport check_commuting_axioms(const std::vector<AxiomInstance>& corpus, Mode mode, std::size_t fuel = 10000);

}  // namespace alc
