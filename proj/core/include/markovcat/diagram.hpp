#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "markovcat/category.hpp"

namespace markovcat::diagram {

/// Raised by the typechecker; path locates the offending subterm, e.g.
/// "/seq[1]/par[0]".
class DiagramError : public std::runtime_error {
 public:
  DiagramError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class UnboundGeneratorError : public DiagramError {
 public:
  UnboundGeneratorError(std::string path, const std::string& name)
      : DiagramError(std::move(path), "unbound generator '" + name + "'") {}
};

class DomainMismatchError : public DiagramError {
 public:
  DomainMismatchError(std::string path, const std::string& expected,
                      const std::string& actual)
      : DiagramError(std::move(path),
                     "domain mismatch: expected " + expected + ", got " + actual) {}
};

/// String-diagram expression: identity and structural wires carry explicit
/// objects, generators are names resolved against an environment. Immutable;
/// subterms are shared.
template <typename Obj>
class Term {
 public:
  struct Id {
    Obj object;
  };
  struct Gen {
    std::string name;
  };
  struct Seq {
    Term first, second;
  };
  struct Par {
    Term left, right;
  };
  struct Swap {
    Obj left, right;
  };
  struct Copy {
    Obj object;
  };
  struct Discard {
    Obj object;
  };
  using Node = std::variant<Id, Gen, Seq, Par, Swap, Copy, Discard>;

  static Term id(Obj x) { return Term(Node(Id{std::move(x)})); }
  static Term gen(std::string name) { return Term(Node(Gen{std::move(name)})); }
  static Term seq(Term a, Term b) { return Term(Node(Seq{std::move(a), std::move(b)})); }
  static Term par(Term a, Term b) { return Term(Node(Par{std::move(a), std::move(b)})); }
  static Term swap(Obj a, Obj b) { return Term(Node(Swap{std::move(a), std::move(b)})); }
  static Term copy(Obj x) { return Term(Node(Copy{std::move(x)})); }
  static Term discard(Obj x) { return Term(Node(Discard{std::move(x)})); }

  const Node& node() const { return *node_; }

 private:
  explicit Term(Node n) : node_(std::make_shared<Node>(std::move(n))) {}
  std::shared_ptr<const Node> node_;
};

template <Category C>
using Env = std::map<std::string, typename C::Morphism>;

namespace detail {

template <Category C>
std::pair<typename C::Object, typename C::Object> typecheck_at(
    const C& cat, const Term<typename C::Object>& term, const Env<C>& env,
    const std::string& path) {
  using T = Term<typename C::Object>;
  using Obj = typename C::Object;
  return std::visit(
      [&](const auto& node) -> std::pair<Obj, Obj> {
        using N = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<N, typename T::Id>) {
          return {node.object, node.object};
        } else if constexpr (std::is_same_v<N, typename T::Gen>) {
          auto it = env.find(node.name);
          if (it == env.end()) throw UnboundGeneratorError(path, node.name);
          return {cat.dom(it->second), cat.cod(it->second)};
        } else if constexpr (std::is_same_v<N, typename T::Seq>) {
          auto first = typecheck_at(cat, node.first, env, path + "/seq[0]");
          auto second = typecheck_at(cat, node.second, env, path + "/seq[1]");
          if (!cat.object_equal(first.second, second.first)) {
            throw DomainMismatchError(path + "/seq[1]", cat.show_object(first.second),
                                      cat.show_object(second.first));
          }
          return {first.first, second.second};
        } else if constexpr (std::is_same_v<N, typename T::Par>) {
          auto left = typecheck_at(cat, node.left, env, path + "/par[0]");
          auto right = typecheck_at(cat, node.right, env, path + "/par[1]");
          return {cat.tensor_object(left.first, right.first),
                  cat.tensor_object(left.second, right.second)};
        } else if constexpr (std::is_same_v<N, typename T::Swap>) {
          return {cat.tensor_object(node.left, node.right),
                  cat.tensor_object(node.right, node.left)};
        } else if constexpr (std::is_same_v<N, typename T::Copy>) {
          return {node.object, cat.tensor_object(node.object, node.object)};
        } else {
          static_assert(std::is_same_v<N, typename T::Discard>);
          return {node.object, cat.unit()};
        }
      },
      term.node());
}

}  // namespace detail

/// Infers (dom, cod) of a term, or throws UnboundGeneratorError /
/// DomainMismatchError pointing at the offending subterm.
template <Category C>
std::pair<typename C::Object, typename C::Object> typecheck(
    const C& cat, const Term<typename C::Object>& term, const Env<C>& env) {
  return detail::typecheck_at(cat, term, env, "");
}

/// Compositional evaluation; requires the term to typecheck first.
template <Category C>
typename C::Morphism evaluate(const C& cat, const Term<typename C::Object>& term,
                              const Env<C>& env) {
  typecheck(cat, term, env);
  using T = Term<typename C::Object>;
  struct Eval {
    const C& cat;
    const Env<C>& env;
    typename C::Morphism operator()(const T& t) const {
      return std::visit(
          [&](const auto& node) -> typename C::Morphism {
            using N = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<N, typename T::Id>) {
              return cat.identity(node.object);
            } else if constexpr (std::is_same_v<N, typename T::Gen>) {
              return env.at(node.name);
            } else if constexpr (std::is_same_v<N, typename T::Seq>) {
              return cat.compose((*this)(node.first), (*this)(node.second));
            } else if constexpr (std::is_same_v<N, typename T::Par>) {
              return cat.tensor((*this)(node.left), (*this)(node.right));
            } else if constexpr (std::is_same_v<N, typename T::Swap>) {
              return cat.swap(node.left, node.right);
            } else if constexpr (std::is_same_v<N, typename T::Copy>) {
              return cat.copy(node.object);
            } else {
              static_assert(std::is_same_v<N, typename T::Discard>);
              return cat.discard(node.object);
            }
          },
          t.node());
    }
  };
  return Eval{cat, env}(term);
}

}  // namespace markovcat::diagram
