#pragma once

#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "homtwist/module_smash.hpp"
#include "homtwist/uq_sl2.hpp"

namespace homtwist {

/// Any named object a manifest or a gallery bundle can hold.
/// Manifest kind names: "hom_algebra", "twisting_map", ..., "uq_params".
using Object = std::variant<HomAlgebra, HomCoalgebra, HomBialgebra, LinearMap, Operator2, Operator3, TwistingMapR,
                            ActionTable, CoactionTable, UqParams>;

template <class T>
constexpr std::string_view kind_name_of() {
  if constexpr (std::is_same_v<T, HomAlgebra>) return "hom_algebra";
  else if constexpr (std::is_same_v<T, HomCoalgebra>) return "hom_coalgebra";
  else if constexpr (std::is_same_v<T, HomBialgebra>) return "hom_bialgebra";
  else if constexpr (std::is_same_v<T, LinearMap>) return "linear_map";
  else if constexpr (std::is_same_v<T, Operator2>) return "operator2";
  else if constexpr (std::is_same_v<T, Operator3>) return "operator3";
  else if constexpr (std::is_same_v<T, TwistingMapR>) return "twisting_map";
  else if constexpr (std::is_same_v<T, ActionTable>) return "action";
  else if constexpr (std::is_same_v<T, CoactionTable>) return "coaction";
  else return "uq_params";
}

inline std::string_view kind_name(const Object& o) {
  return std::visit([](const auto& x) { return kind_name_of<std::decay_t<decltype(x)>>(); }, o);
}

}  // namespace homtwist
