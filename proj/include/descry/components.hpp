#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "descry/core.hpp"

namespace descry {

enum class ComponentKind { mentions_extractor, linker, relations_extractor };

const char* to_string(ComponentKind kind);

/// Registry row: key, stage kind, and (for linkers) whether the component
/// runs end-to-end, i.e. needs no prior mention detection.
struct ComponentDescriptor {
  std::string key;
  ComponentKind kind;
  bool is_end_to_end = false;

  friend bool operator==(const ComponentDescriptor&,
                         const ComponentDescriptor&) = default;
};

/// Finds candidate spans that may denote entities, without assigning
/// classes. Implement predict to create a new component; it receives one
/// batch of documents and returns one span list per input, order-aligned.
class MentionsExtractor {
 public:
  virtual ~MentionsExtractor() = default;
  virtual std::string key() const = 0;
  virtual bool concurrency_safe() const { return true; }
  virtual std::vector<std::vector<Span>> predict(
      std::span<const Document> docs) const = 0;
};

/// Performs entity classification and/or entity linking. End-to-end linkers
/// annotate raw text; the others consume the mention layer as their
/// candidate spans.
class Linker {
 public:
  virtual ~Linker() = default;
  virtual std::string key() const = 0;
  virtual bool end_to_end() const = 0;
  /// False for linkers (the KB linker) that ignore the configured entity
  /// classes and label spans from their own inventory instead.
  virtual bool requires_entities() const { return true; }
  virtual bool concurrency_safe() const { return true; }
  virtual std::vector<std::vector<Span>> predict(
      std::span<const Document> docs,
      const std::vector<Entity>& entities) const = 0;
};

/// Assigns a relation class (or abstains) to ordered pairs of entity spans.
class RelationExtractor {
 public:
  virtual ~RelationExtractor() = default;
  virtual std::string key() const = 0;
  virtual bool concurrency_safe() const { return true; }
  virtual std::vector<std::vector<RelationTriple>> predict(
      std::span<const Document> docs,
      const std::vector<Relation>& relations) const = 0;
};

/// Batched front doors over the component interfaces: chunk `docs` into
/// batches of `batch_size`, invoke the component once per batch, and
/// concatenate. Results stay aligned with the input for any batch size.
std::vector<std::vector<Span>> mentions_predict(const MentionsExtractor& component,
                                                const std::vector<Document>& docs,
                                                int batch_size);

std::vector<std::vector<Span>> linker_predict(const Linker& component,
                                              const std::vector<Document>& docs,
                                              const std::vector<Entity>& entities,
                                              int batch_size);

std::vector<std::vector<RelationTriple>> relations_predict(
    const RelationExtractor& component, const std::vector<Document>& docs,
    const std::vector<Relation>& relations, int batch_size);

/// Resolves overlaps among labeled spans: keep higher score, then longer
/// span, then smaller start offset, then lower tie_order. Returns the kept
/// spans in canonical order.
std::vector<Span> resolve_overlaps(std::vector<Span> spans,
                                   std::vector<std::size_t> tie_order = {});

}  // namespace descry
