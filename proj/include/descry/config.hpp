#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "descry/core.hpp"

namespace descry {

/// Reference to a registered component: a registry key plus the raw JSON
/// object it was configured with. Composite components (the ensembles) keep
/// their member definitions inside `spec`.
struct ComponentRef {
  std::string type;
  nlohmann::json spec = nlohmann::json::object();

  ComponentRef() = default;
  explicit ComponentRef(std::string type)
      : type(std::move(type)), spec({{"type", this->type}}) {}
  ComponentRef(std::string type, nlohmann::json spec)
      : type(std::move(type)), spec(std::move(spec)) {}

  /// The "params" object of the config entry, or an empty object.
  nlohmann::json params() const;

  friend bool operator==(const ComponentRef&, const ComponentRef&) = default;
};

/// Declarative selection of output classes and of the component filling each
/// pipeline stage.
struct PipelineConfig {
  std::vector<Entity> entities;
  std::vector<Relation> relations;
  std::optional<ComponentRef> mentions_extractor;
  std::optional<ComponentRef> linker;
  std::optional<ComponentRef> relations_extractor;
  int batch_size = 32;
  std::string device = "cpu";  // recorded, unused by the built-in components

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

/// Returns the config unchanged if all its invariants hold, otherwise throws
/// an Error naming the violated rule (DuplicateClassName, EmptyConfig,
/// MissingMentionsExtractor, UnknownComponent, InvalidInput).
PipelineConfig validate_config(const PipelineConfig& config);

PipelineConfig config_from_json(const nlohmann::json& j);
PipelineConfig load_config(const std::string& path);
nlohmann::json config_to_json(const PipelineConfig& config);

Entity entity_from_json(const nlohmann::json& j);
Relation relation_from_json(const nlohmann::json& j);
nlohmann::json entity_to_json(const Entity& e);
nlohmann::json relation_to_json(const Relation& r);

}  // namespace descry
