#pragma once

#include <memory>
#include <string>

namespace alc {

enum class TypeKind { Base, Bit, Int, Top, Arrow, Prod, Monad };

// Simple types: base constants, bit, int, top, A -> B, A * B, M A.
// Immutable; copies share structure.
class Type {
public:
    static Type base(std::string name);
    static Type bit();
    static Type integer();
    static Type top();
    static Type arrow(Type dom, Type cod);
    static Type prod(Type fst, Type snd);
    static Type monad(Type inner);

    TypeKind kind() const { return node_->kind; }
    const std::string& name() const { return node_->name; }
    // Arrow: domain/codomain. Prod: components. Monad: left() is the inner type.
    const Type& left() const { return *node_->left; }
    const Type& right() const { return *node_->right; }

    bool is_arrow() const { return kind() == TypeKind::Arrow; }
    bool is_monad() const { return kind() == TypeKind::Monad; }

    // No arrows anywhere inside.
    bool is_first_order() const;
    // Ground types, M of ground, and products of those.
    bool is_observable() const;

    bool operator==(const Type& o) const;
    std::string str() const;

private:
    struct Node {
        TypeKind kind;
        std::string name;
        std::shared_ptr<const Type> left, right;
    };
    explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

}  // namespace alc
