#pragma once

#include "alc/typing.hpp"

#include <random>

namespace alc::testgen {

struct GenOptions {
    std::size_t max_size = 25;
    // succ, pred, iszero, if and numerals
    bool pcf = true;
    // sqrt2 and i among the scalars
    bool quad = false;
    // Only ground, M ground and products of them as result types.
    bool observable = false;
};

// Random well-typed terms, built type-directed so the intended type is known.
class TermGen {
public:
    TermGen(std::uint64_t seed, GenOptions opts);

    Type type(int depth);
    Type observable_type(int depth);
    Scalar scalar();
    // A term of type a in ctx, roughly within budget nodes.
    Term of_type(const Context& ctx, const Type& a, int budget);
    // Closed, Y-free, at most max_size nodes.
    std::pair<Term, Type> closed();

    std::mt19937_64& rng() { return rng_; }

private:
    int pick(int n);
    bool coin(double p);
    std::string fresh();
    Term leaf(const Context& ctx, const Type& a, int depth);

    std::mt19937_64 rng_;
    GenOptions opts_;
    int counter_ = 0;
};

// Simply-typed source term over x | \x.s | s t | s+t | 0 | a*s, with base
// type iota, typed in a context of free variables.
struct SourceTerm {
    Context ctx;
    Term term;
    Type type;
};

SourceTerm source_term(std::mt19937_64& rng, std::size_t max_size);

}  // namespace alc::testgen
