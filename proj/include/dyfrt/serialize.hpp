#pragma once

#include <json.hpp>
#include <string>
#include <variant>

#include "dyfrt/carriers.hpp"
#include "dyfrt/dybm.hpp"
#include "dyfrt/frt.hpp"
#include "dyfrt/lop.hpp"
#include "dyfrt/vecth.hpp"

namespace dyfrt::io {

/// Keys keep insertion order so reports are byte-stable.
using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; StructuralError on I/O or syntax problems.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

Json scalar_to_json(const Scalar& s);
/// Integers and "p/q" strings.
Scalar scalar_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

using Structure = std::variant<Quasigroup, FiniteAction, TernarySystem>;

Json to_json(const Quasigroup& q);
Json to_json(const FiniteAction& a);
Json to_json(const TernarySystem& t);
/// Dispatches on "kind". Only shape and range are enforced here; the
/// Latin-square and bijectivity checks belong to the validators.
Structure structure_from_json(const Json& j, int size_cap = kDefaultSizeCap);
/// An action from an action, quasigroup or dybm file.
FiniteAction action_from_json(const Json& j, int size_cap = kDefaultSizeCap);

Json to_json(const VectHObject& v);
VectHObject object_from_json(const Json& j);
Json to_json(const VectHMorphism& f);
VectHMorphism morphism_from_json(const Json& j);

Json to_json(const DynamicalMap& r);
DynamicalMap dybm_from_json(const Json& j, int size_cap = kDefaultSizeCap);

/// {"kind":"sigma","x":object,"mats":...} or a dybm file, from which σ_R is built.
SigmaContext sigma_from_json(const Json& j, int size_cap = kDefaultSizeCap);
/// The action underlying a sigma file. For an explicit σ, X's object is the action.
FiniteAction sigma_action_from_json(const Json& j, int size_cap = kDefaultSizeCap);

Json to_json(const LOperator& l);
LOperator loperator_from_json(const Json& j, const VectHObject& x);

Json to_json(const AlgebraElement& e);
AlgebraElement element_from_json(const Json& j, int h_size, int x_size);

Json to_json(const DhxElement& e);

}  // namespace dyfrt::io
