#pragma once

#include "alc/term.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alc {

// Ordered typing context; lookup finds the rightmost binding.
class Context {
public:
    Context() = default;
    Context(std::initializer_list<std::pair<std::string, Type>> bindings) : bindings_(bindings) {}

    Context extended(std::string x, Type t) const;
    void push(std::string x, Type t) { bindings_.emplace_back(std::move(x), std::move(t)); }
    std::optional<Type> lookup(const std::string& x) const;
    const std::vector<std::pair<std::string, Type>>& bindings() const { return bindings_; }
    bool empty() const { return bindings_.empty(); }
    std::string str() const;

private:
    std::vector<std::pair<std::string, Type>> bindings_;
};

class TypeError : public std::runtime_error {
public:
    TypeError(Term subterm, std::string rule, std::string message);

    const Term& subterm() const { return subterm_; }
    const std::string& rule() const { return rule_; }

private:
    Term subterm_;
    std::string rule_;
};

struct Judgment {
    Context ctx;
    Term term;
    Type type;
    std::string str() const;
};

// Bidirectional checking of the typing rules plus the fixpoint rule and the
// PCF constants. Lambda binders need annotations unless checked against an
// arrow; zero needs an ascription unless checked.
Type infer(const Context& ctx, const Term& t);
void check(const Context& ctx, const Term& t, const Type& expected);
std::optional<Type> try_infer(const Context& ctx, const Term& t);
bool has_type(const Context& ctx, const Term& t, const Type& expected);

// True iff reduct still has the judgment's type.
bool check_subject_reduction(const Judgment& j, const Term& reduct);

}  // namespace alc
