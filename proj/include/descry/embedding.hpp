#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace descry {

inline constexpr std::size_t kEmbeddingDim = 256;

/// Fixed-dimension real vector with unit L2 norm, or the zero vector for
/// inputs shorter than one trigram.
using EmbeddingVector = std::array<double, kEmbeddingDim>;

/// FNV-1a 64-bit over raw bytes.
constexpr std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Deterministic text embedding: lowercase the input, slide a 3-character
/// window over it (spaces included), hash each trigram with FNV-1a 64,
/// accumulate counts into bucket (hash mod 256), then L2-normalize.
/// Inputs shorter than 3 characters embed to the zero vector.
EmbeddingVector embed(std::string_view text);

/// Cosine similarity; 0 when either vector is zero.
double cosine(const EmbeddingVector& a, const EmbeddingVector& b);

double l2_norm(const EmbeddingVector& v);

}  // namespace descry
