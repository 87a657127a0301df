#pragma once

#include "alc/rewrite.hpp"
#include "alc/term.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace alc {

// strong: free weak module plus bottom. weak: functions into A u {omega}.
enum class Model { Strong, Weak };
const char* model_name(Model m);

// Element of the semiring A u {omega}; alpha*omega = alpha+omega = omega.
class Coef {
public:
    Coef() = default;
    Coef(Scalar s) : value_(std::move(s)) {}  // NOLINT
    static Coef omega();

    bool is_omega() const { return omega_; }
    bool is_zero() const { return !omega_ && value_.is_zero(); }
    const Scalar& value() const { return value_; }

    friend Coef operator+(const Coef& a, const Coef& b);
    friend Coef operator*(const Coef& a, const Coef& b);
    friend bool operator==(const Coef& a, const Coef& b) { return a.omega_ == b.omega_ && (a.omega_ || a.value_ == b.value_); }
    std::strong_ordering operator<=>(const Coef& o) const;
    std::string str() const;

private:
    bool omega_ = false;
    Scalar value_ = Scalar::zero();
};

class ModuleElement;
using Env = std::map<std::string, class SemValue>;

class SemValue {
public:
    enum class Kind { Unit, Bool, Int, Pair, Closure, Module, Thunk, Atom };

    static SemValue unit();
    static SemValue boolean(bool b);
    static SemValue integer(std::uint64_t n);
    static SemValue pair(SemValue a, SemValue b);
    // lam must be an abstraction; env is cut down to its free variables.
    static SemValue closure(Term lam, const Env& env);
    static SemValue module(ModuleElement m);
    // The frozen fixpoint [Y(v)] of a closure v, forced on demand.
    static SemValue fix_thunk(SemValue v);
    // Free variable or stuck expression of an open term.
    static SemValue atom(std::string text);

    Kind kind() const;
    bool as_bool() const;
    std::uint64_t as_int() const;
    const SemValue& first() const;
    const SemValue& second() const;
    const Term& lam() const;
    const Env& env() const;
    const ModuleElement& element() const;
    const SemValue& fixed() const;
    const std::string& text() const;

    std::strong_ordering operator<=>(const SemValue& o) const;
    bool operator==(const SemValue& o) const { return (*this <=> o) == 0; }
    std::string str() const;

private:
    struct Node;
    explicit SemValue(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct SemLess {
    bool operator()(const SemValue& a, const SemValue& b) const { return (a <=> b) < 0; }
};

class ModuleElement {
public:
    using Map = std::map<SemValue, Coef, SemLess>;

    // Additive unit: the empty untouched sum, or the zero function.
    static ModuleElement zero(Model m);
    static ModuleElement bottom();
    static ModuleElement unit(Model m, const SemValue& v);
    // Weak model: every point mapped to c.
    static ModuleElement constant(const Coef& c);

    Model model() const { return model_; }
    bool is_bottom() const { return bottom_; }
    // Touched support with coefficients (may hold explicit zeros).
    const Map& entries() const { return entries_; }
    // Weak model value off the support.
    const Coef& otherwise() const { return otherwise_; }
    Coef at(const SemValue& x) const;

    void add_at(const SemValue& x, const Coef& c);
    void set(const SemValue& x, const Coef& c);
    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement scaled(const Coef& c) const;
    ModuleElement bind(const std::function<ModuleElement(const SemValue&)>& f) const;
    // Strict mode: zero-coefficient points are forgotten.
    ModuleElement without_zeros() const;

    // Semantic equality: touched supports matter in the strong model,
    // pointwise values in the weak one.
    bool operator==(const ModuleElement& o) const;
    // Structural total order, used when elements are base points.
    std::strong_ordering operator<=>(const ModuleElement& o) const;
    std::string str() const;

private:
    Model model_ = Model::Strong;
    bool bottom_ = false;
    Map entries_;
    Coef otherwise_;
};

struct SemOptions {
    Model model = Model::Strong;
    Mode mode = Mode::Weak;
    // Evaluation steps before giving up (result marked approximate).
    std::size_t fuel = 10000;
    // Iterations when a fixpoint is computed as a limit.
    std::size_t fix_bound = 64;
    // Nested unfoldings of one fixpoint before switching to iteration.
    std::size_t unfold_depth = 24;
};

struct Denotation {
    ModuleElement element;
    // Some limit was cut off or fuel ran out.
    bool approximate = false;
    std::string str() const;
};

// Interpretation of a computation in the chosen monad. Free variables not in
// env denote atoms.
Denotation denote_computation(const Env& env, const Term& t, const SemOptions& opts);
// Interpretation of a value; throws std::runtime_error if t does not denote a
// single point with coefficient one.
SemValue denote_value(const Env& env, const Term& t, const SemOptions& opts);

// Least fixpoint by iteration from bottom: first stable iterate, else bottom.
ModuleElement fix_strong(const std::function<ModuleElement(const ModuleElement&)>& f, std::size_t bound,
                         bool* approximate = nullptr);
// Pointwise limit from the zero function: points still moving after bound
// iterations are sent to omega.
ModuleElement fix_weak(const std::function<ModuleElement(const ModuleElement&)>& f, std::size_t bound,
                       bool* approximate = nullptr);

// Strength t_{A,B}: (a, m) |-> m >>= \b. unit <a, b>.
ModuleElement strength(const SemValue& a, const ModuleElement& m);

// Parse a query point: integer, *, tt, ff.
std::optional<SemValue> parse_point(const std::string& s);

struct SoundnessReport {
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    std::vector<std::string> details;
    bool ok() const { return mismatches == 0; }
};

// Every term along the trace must denote what the initial term denotes.
// Steps whose denotations are approximate are skipped.
SoundnessReport soundness_check(const Trace& trace, const Env& env, const SemOptions& opts);
// Normalizes t (mode from opts, call-by-value) and checks the trace.
SoundnessReport soundness_check(const Term& t, const Env& env, const SemOptions& opts, std::size_t steps);

}  // namespace alc
