#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "descry/error.hpp"

namespace descry {

/// Half-open character interval [start, end) in a document, optionally
/// labeled with a class name and scored with a confidence in [0, 1].
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
  std::optional<std::string> label;
  std::optional<double> score;

  Span() = default;
  Span(std::size_t start, std::size_t end) : start(start), end(end) {}
  Span(std::size_t start, std::size_t end, std::string label)
      : start(start), end(end), label(std::move(label)) {}
  Span(std::size_t start, std::size_t end, std::string label, double score)
      : start(start), end(end), label(std::move(label)), score(score) {}

  std::size_t length() const { return end - start; }

  friend bool operator==(const Span&, const Span&) = default;
};

/// Canonical ordering used when finalizing annotation layers.
bool span_key_less(const Span& a, const Span& b);

/// True iff [a.start, a.end) and [b.start, b.end) intersect.
bool span_overlaps(const Span& a, const Span& b);

/// Output entity class: a name plus the free-text description that carries
/// the zero-shot side information. The optional vocabulary lists surface
/// forms for dictionary linking.
struct Entity {
  std::string name;
  std::string description;
  std::vector<std::string> vocabulary;

  Entity() = default;
  Entity(std::string name, std::string description)
      : name(std::move(name)), description(std::move(description)) {}
  Entity(std::string name, std::string description,
         std::vector<std::string> vocabulary)
      : name(std::move(name)),
        description(std::move(description)),
        vocabulary(std::move(vocabulary)) {}

  friend bool operator==(const Entity&, const Entity&) = default;
};

/// Output relation class: name plus free-text description.
struct Relation {
  std::string name;
  std::string description;

  Relation() = default;
  Relation(std::string name, std::string description)
      : name(std::move(name)), description(std::move(description)) {}

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// A labeled, scored ordered pair of entity spans in one document.
struct RelationTriple {
  Span subject;
  Span object;
  std::string label;
  double score = 0.0;

  friend bool operator==(const RelationTriple&, const RelationTriple&) = default;
};

bool triple_key_less(const RelationTriple& a, const RelationTriple& b);

/// Immutable text plus accumulating annotation layers. Pipeline stages only
/// ever append annotations; the text is never rewritten.
struct Document {
  std::string text;
  std::vector<Span> mentions;          // unlabeled candidate spans
  std::vector<Span> entities;          // labeled, non-overlapping after a pipeline run
  std::vector<RelationTriple> relations;
  std::map<std::string, double> timing;  // stage name -> elapsed seconds

  friend bool operator==(const Document&, const Document&) = default;
};

/// Document with the given text and all annotation layers empty.
Document doc_from_text(std::string text);

/// Throws SpanOutOfBounds unless 0 <= start < end <= text length and any
/// score lies in [0, 1].
void validate_span(const Span& span, std::string_view text,
                   std::string_view context = "");

/// Maximal runs of ASCII alphanumerics, as unlabeled spans in text order.
std::vector<Span> tokenize(std::string_view text);

inline bool is_word_char(char c) {
  return (c >= '0' && c <= '9') || (c >= 'A' && c <= 'Z') ||
         (c >= 'a' && c <= 'z');
}

std::string ascii_lower(std::string_view text);

/// Deduplicates on (start, end, label), keeping the highest score per key,
/// and sorts into canonical order. Used at document finalization: ensemble
/// voting requires set semantics on prediction lists.
std::vector<Span> dedup_spans(std::vector<Span> spans);

/// Deduplicates triples on (subject key, object key, label), keeping the
/// highest score, and sorts into canonical order.
std::vector<RelationTriple> dedup_triples(std::vector<RelationTriple> triples);

}  // namespace descry
