#pragma once

#include <concepts>
#include <string>

namespace markovcat {

/// Interface every category instance implements: a strict semicartesian
/// symmetric monoidal category with copy/discard on every object and exact,
/// decidable equality of parallel morphisms. Instances are small immutable
/// values; every operation is a pure function of its arguments.
///
/// compose(f, g) is diagrammatic: first f, then g.
template <typename C>
concept Category = requires(const C& c, const typename C::Object& x,
                            const typename C::Object& y, const typename C::Morphism& f,
                            const typename C::Morphism& g) {
  typename C::Object;
  typename C::Morphism;
  { c.unit() } -> std::convertible_to<typename C::Object>;
  { c.tensor_object(x, y) } -> std::convertible_to<typename C::Object>;
  { c.object_equal(x, y) } -> std::convertible_to<bool>;
  { c.dom(f) } -> std::convertible_to<typename C::Object>;
  { c.cod(f) } -> std::convertible_to<typename C::Object>;
  { c.identity(x) } -> std::convertible_to<typename C::Morphism>;
  { c.compose(f, g) } -> std::convertible_to<typename C::Morphism>;
  { c.tensor(f, g) } -> std::convertible_to<typename C::Morphism>;
  { c.copy(x) } -> std::convertible_to<typename C::Morphism>;
  { c.discard(x) } -> std::convertible_to<typename C::Morphism>;
  { c.swap(x, y) } -> std::convertible_to<typename C::Morphism>;
  { c.morphism_equal(f, g) } -> std::convertible_to<bool>;
  { c.show_object(x) } -> std::convertible_to<std::string>;
  { c.show_morphism(f) } -> std::convertible_to<std::string>;
};

}  // namespace markovcat
