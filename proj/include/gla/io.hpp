#pragma once

#include "gla/calculus.hpp"
#include "gla/decide.hpp"
#include "gla/internalize.hpp"
#include "gla/semantics.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>

namespace gla::io {

using json = nlohmann::json;

// Malformed files, missing keys, unparsable formulas.
class FormatError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const Derivation& d);
json to_json(const ConstantSpecification& cs);
json to_json(const KripkeModel& m);
json to_json(const LiftResult& r);
json to_json(const Verdict& v);
json to_json(const SoundnessReport& r);

Derivation derivation_from_json(const json& j);
ConstantSpecification cs_from_json(const json& j);
KripkeModel model_from_json(const json& j);
LiftResult lift_result_from_json(const json& j);

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);

Derivation load_derivation(const std::filesystem::path& path);
ConstantSpecification load_cs(const std::filesystem::path& path);
KripkeModel load_model(const std::filesystem::path& path);

} // namespace gla::io
