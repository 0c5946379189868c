#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tgd {

using NodeId = std::uint32_t;
using RecordId = std::size_t;

// Time steps. Edge labels live in [1, Tmax]; seed times in [0, Tmax].
using Time = std::int32_t;

enum class Variant { Simple, Multilabel, Multiedge };

// Raised on malformed input, violated preconditions or invariants.
class TgdError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view to_string(Variant variant);
Variant parse_variant(std::string_view text);

}  // namespace tgd
