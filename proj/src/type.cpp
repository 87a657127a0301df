#include "alc/type.hpp"

namespace alc {

Type Type::base(std::string name) {
    return Type(std::make_shared<Node>(Node{TypeKind::Base, std::move(name), nullptr, nullptr}));
}
Type Type::bit() { return Type(std::make_shared<Node>(Node{TypeKind::Bit, "bit", nullptr, nullptr})); }
Type Type::integer() { return Type(std::make_shared<Node>(Node{TypeKind::Int, "int", nullptr, nullptr})); }
Type Type::top() { return Type(std::make_shared<Node>(Node{TypeKind::Top, "T", nullptr, nullptr})); }

Type Type::arrow(Type dom, Type cod) {
    return Type(std::make_shared<Node>(Node{TypeKind::Arrow, "", std::make_shared<const Type>(std::move(dom)),
                                            std::make_shared<const Type>(std::move(cod))}));
}
Type Type::prod(Type fst, Type snd) {
    return Type(std::make_shared<Node>(Node{TypeKind::Prod, "", std::make_shared<const Type>(std::move(fst)),
                                            std::make_shared<const Type>(std::move(snd))}));
}
Type Type::monad(Type inner) {
    return Type(std::make_shared<Node>(
        Node{TypeKind::Monad, "", std::make_shared<const Type>(std::move(inner)), nullptr}));
}

bool Type::is_first_order() const {
    switch (kind()) {
    case TypeKind::Arrow: return false;
    case TypeKind::Prod: return left().is_first_order() && right().is_first_order();
    case TypeKind::Monad: return left().is_first_order();
    default: return true;
    }
}

bool Type::is_observable() const {
    switch (kind()) {
    case TypeKind::Arrow: return false;
    case TypeKind::Prod: return left().is_observable() && right().is_observable();
    case TypeKind::Monad: {
        const Type& in = left();
        return in.kind() != TypeKind::Arrow && in.kind() != TypeKind::Monad && in.is_observable();
    }
    default: return true;
    }
}

bool Type::operator==(const Type& o) const {
    if (node_ == o.node_) return true;
    if (kind() != o.kind()) return false;
    switch (kind()) {
    case TypeKind::Base: return name() == o.name();
    case TypeKind::Arrow:
    case TypeKind::Prod: return left() == o.left() && right() == o.right();
    case TypeKind::Monad: return left() == o.left();
    default: return true;
    }
}

namespace {
// Precedence: arrow 0 (right assoc), product 1 (left assoc), M 2, atoms 3.
std::string show(const Type& t, int ctx) {
    std::string s;
    int prec = 3;
    switch (t.kind()) {
    case TypeKind::Base:
    case TypeKind::Bit:
    case TypeKind::Int:
    case TypeKind::Top: s = t.name(); break;
    case TypeKind::Arrow:
        prec = 0;
        s = show(t.left(), 1) + " -> " + show(t.right(), 0);
        break;
    case TypeKind::Prod:
        prec = 1;
        s = show(t.left(), 1) + " * " + show(t.right(), 2);
        break;
    case TypeKind::Monad:
        prec = 2;
        s = "M " + show(t.left(), 2);
        break;
    }
    return prec < ctx ? "(" + s + ")" : s;
}
}  // namespace

std::string Type::str() const { return show(*this, 0); }

}  // namespace alc
