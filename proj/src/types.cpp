#include "abchain/types.hpp"

#include "abchain/errors.hpp"

namespace abchain {

Protocol parse_protocol(const std::string& name) {
  if (name == "i") return Protocol::cluster;
  if (name == "ii") return Protocol::bell_ends;
  if (name == "iii") return Protocol::bell_centre;
  throw InvalidInputError("unknown protocol: " + name + " (expected i, ii or iii)");
}

std::string to_string(Protocol p) {
  switch (p) {
    case Protocol::cluster: return "i";
    case Protocol::bell_ends: return "ii";
    case Protocol::bell_centre: return "iii";
  }
  return "?";
}

}  // namespace abchain
