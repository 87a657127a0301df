#include "gen.hpp"

namespace alc::testgen {

namespace {

std::vector<std::pair<std::string, Type>> vars_of(const Context& ctx, const Type& a) {
    std::vector<std::pair<std::string, Type>> out;
    for (const auto& b : ctx.bindings())
        if (b.second == a && ctx.lookup(b.first) == b.second) out.push_back(b);
    return out;
}

}  // namespace

TermGen::TermGen(std::uint64_t seed, GenOptions opts) : rng_(seed), opts_(opts) {}

int TermGen::pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
bool TermGen::coin(double p) { return std::bernoulli_distribution(p)(rng_); }
std::string TermGen::fresh() { return "v" + std::to_string(counter_++); }

Type TermGen::type(int depth) {
    int k = pick(depth <= 0 ? 3 : 7);
    switch (k) {
    case 0: return Type::top();
    case 1: return opts_.pcf ? Type::integer() : Type::base("iota");
    case 2: return opts_.pcf ? Type::bit() : Type::top();
    case 3:
    case 4: return Type::monad(type(depth - 1));
    case 5: return Type::arrow(type(depth - 1), type(depth - 1));
    default: return Type::prod(type(depth - 1), type(depth - 1));
    }
}

Type TermGen::observable_type(int depth) {
    int k = pick(depth <= 0 ? 3 : 5);
    switch (k) {
    case 0: return Type::top();
    case 1: return opts_.pcf ? Type::integer() : Type::top();
    case 2: return opts_.pcf ? Type::bit() : Type::top();
    case 3: return Type::monad(observable_type(0));
    default: return Type::prod(observable_type(depth - 1), observable_type(depth - 1));
    }
}

Scalar TermGen::scalar() {
    static const Scalar rat[] = {Scalar(1), Scalar(2), Scalar(-1), Scalar(Rat(1, 2)), Scalar(0), Scalar(3)};
    if (opts_.quad && coin(0.2)) return coin(0.5) ? Scalar::sqrt2() : Scalar::i();
    return rat[pick(6)];
}

// Smallest closed-ish inhabitant.
Term TermGen::leaf(const Context& ctx, const Type& a, int depth) {
    auto vs = vars_of(ctx, a);
    if (!vs.empty() && coin(0.6)) return Term::var(vs[pick(int(vs.size()))].first);
    if (depth > 3) return Term::zero(a);
    switch (a.kind()) {
    case TypeKind::Top: return coin(0.8) ? Term::star() : Term::zero(a);
    case TypeKind::Bit: return coin(0.5) ? Term::tt() : Term::ff();
    case TypeKind::Int: return Term::numeral(unsigned(pick(3)));
    case TypeKind::Monad: return Term::canon(leaf(ctx, a.left(), depth + 1));
    case TypeKind::Arrow: {
        std::string x = fresh();
        return Term::lam(x, a.left(), leaf(ctx.extended(x, a.left()), a.right(), depth + 1));
    }
    case TypeKind::Prod: return Term::pair(leaf(ctx, a.left(), depth + 1), leaf(ctx, a.right(), depth + 1));
    default: return Term::zero(a);
    }
}

Term TermGen::of_type(const Context& ctx, const Type& a, int budget) {
    if (budget <= 1) return leaf(ctx, a, 0);
    int rest = budget - 1;
    auto split = [&] { return 1 + pick(std::max(1, rest - 1)); };
    for (;;) {
        switch (pick(14)) {
        case 0:
        case 1: {  // introduction form
            switch (a.kind()) {
            case TypeKind::Monad: return Term::canon(of_type(ctx, a.left(), rest));
            case TypeKind::Arrow: {
                std::string x = fresh();
                return Term::lam(x, a.left(), of_type(ctx.extended(x, a.left()), a.right(), rest));
            }
            case TypeKind::Prod: {
                int l = split();
                return Term::pair(of_type(ctx, a.left(), l), of_type(ctx, a.right(), std::max(1, rest - l)));
            }
            case TypeKind::Int:
                if (opts_.pcf) return coin(0.5) ? Term::succ(of_type(ctx, a, rest)) : Term::pred(of_type(ctx, a, rest));
                break;
            case TypeKind::Bit:
                if (opts_.pcf) return Term::iszero(of_type(ctx, Type::integer(), rest));
                break;
            default: break;
            }
            return leaf(ctx, a, 0);
        }
        case 2:
        case 3: {
            int l = split();
            return Term::plus(of_type(ctx, a, l), of_type(ctx, a, std::max(1, rest - l)));
        }
        case 4: return Term::scal(scalar(), of_type(ctx, a, rest));
        case 5: return Term::zero(a);
        case 6:
        case 7: {  // application
            if (rest < 3) break;
            Type dom = type(1);
            int l = split();
            return Term::app(of_type(ctx, Type::arrow(dom, a), l), of_type(ctx, dom, std::max(1, rest - l)));
        }
        case 8: return Term::cocanon(of_type(ctx, Type::monad(a), rest));
        case 9: {
            if (rest < 3) break;
            Type other = type(0);
            return coin(0.5) ? Term::fst(of_type(ctx, Type::prod(a, other), rest))
                             : Term::snd(of_type(ctx, Type::prod(other, a), rest));
        }
        case 10: {
            if (!opts_.pcf || rest < 3) break;
            int c = 1 + pick(std::max(1, rest / 3));
            int l = std::max(1, (rest - c) / 2);
            return Term::ifz(of_type(ctx, Type::bit(), c), of_type(ctx, a, l), of_type(ctx, a, l));
        }
        case 11: {  // beta redex with a value argument
            if (rest < 3) break;
            Type dom = type(1);
            std::string x = fresh();
            int l = split();
            Term arg = leaf(ctx, dom, 0);
            return Term::app(Term::lam(x, dom, of_type(ctx.extended(x, dom), a, l)), arg);
        }
        default: return leaf(ctx, a, 0);
        }
    }
}

std::pair<Term, Type> TermGen::closed() {
    for (;;) {
        Type a = opts_.observable ? observable_type(1) : type(2);
        int budget = 2 + pick(int(opts_.max_size) - 2);
        Term t = of_type({}, a, budget);
        if (t.size() <= opts_.max_size) return {t, a};
    }
}

// ---------------------------------------------------------------------------

namespace {

struct SourceGen {
    std::mt19937_64& rng;
    int counter = 0;

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

    Type type(int depth) {
        if (depth <= 0 || pick(3) == 0) return Type::base("iota");
        return Type::arrow(type(depth - 1), type(depth - 1));
    }

    Scalar scalar() {
        static const Scalar s[] = {Scalar(2), Scalar(-1), Scalar(Rat(1, 3)), Scalar(0)};
        return s[pick(4)];
    }

    Term gen(const Context& ctx, const Type& a, int budget) {
        auto vs = vars_of(ctx, a);
        if (budget <= 1) {
            if (!vs.empty() && pick(4) != 0) return Term::var(vs[pick(int(vs.size()))].first);
            if (a.is_arrow()) {
                std::string x = "s" + std::to_string(counter++);
                return Term::lam(x, a.left(), gen(ctx.extended(x, a.left()), a.right(), 1));
            }
            return Term::zero(a);
        }
        int rest = budget - 1;
        switch (pick(6)) {
        case 0:
            if (a.is_arrow()) {
                std::string x = "s" + std::to_string(counter++);
                return Term::lam(x, a.left(), gen(ctx.extended(x, a.left()), a.right(), rest));
            }
            [[fallthrough]];
        case 1: {
            if (rest < 2) return gen(ctx, a, 1);
            Type dom = type(1);
            int l = 1 + pick(rest - 1);
            return Term::app(gen(ctx, Type::arrow(dom, a), l), gen(ctx, dom, std::max(1, rest - l)));
        }
        case 2: {
            int l = 1 + pick(std::max(1, rest - 1));
            return Term::plus(gen(ctx, a, l), gen(ctx, a, std::max(1, rest - l)));
        }
        case 3: return Term::scal(scalar(), gen(ctx, a, rest));
        case 4: return Term::zero(a);
        default: return gen(ctx, a, 1);
        }
    }
};

}  // namespace

SourceTerm source_term(std::mt19937_64& rng, std::size_t max_size) {
    SourceGen g{rng};
    for (;;) {
        Context ctx;
        int nvars = g.pick(3);
        for (int i = 0; i < nvars; ++i) ctx.push("x" + std::to_string(i), g.type(2));
        Type a = g.type(2);
        Term t = g.gen(ctx, a, 1 + g.pick(int(max_size)));
        if (t.size() <= max_size) return {ctx, t, a};
    }
}

}  // namespace alc::testgen
