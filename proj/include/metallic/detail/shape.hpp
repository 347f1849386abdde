/**
 * @file shape.hpp
 * @brief Syntactic shape predicates on canonical codes (internal).
 *
 * Several tree and navigation rules key on four digit-string shapes:
 *
 *   1 0^*    the rightmost branch of the black tree (the numbers m_n)
 *   1 0^* 1  the leftmost branch of the black tree above level 1
 *   1^+      the rightmost white branch (the numbers M_n)
 *   1^* 2    the leftmost branch of the white tree
 */
#pragma once

#include "metallic/code.hpp"

namespace metallic::detail {

/// Code is 1 0^* (covers the root "1").
inline bool is_pow(const MetallicCode& code) {
  const auto& ds = code.digits;
  if (ds[0] != 1) return false;
  for (std::size_t i = 1; i < ds.size(); ++i)
    if (ds[i] != 0) return false;
  return true;
}

/// Code is 1 0^* 1 (covers "11").
inline bool is_pow_one(const MetallicCode& code) {
  const auto& ds = code.digits;
  if (ds.size() < 2 || ds[0] != 1 || ds.back() != 1) return false;
  for (std::size_t i = 1; i + 1 < ds.size(); ++i)
    if (ds[i] != 0) return false;
  return true;
}

/// Code is 1^+ (covers the root "1").
inline bool is_all_ones(const MetallicCode& code) {
  for (int d : code.digits)
    if (d != 1) return false;
  return true;
}

/// Code is 1^* 2 (covers "2").
inline bool is_ones_then_two(const MetallicCode& code) {
  const auto& ds = code.digits;
  if (ds.back() != 2) return false;
  for (std::size_t i = 0; i + 1 < ds.size(); ++i)
    if (ds[i] != 1) return false;
  return true;
}

}  // namespace metallic::detail
