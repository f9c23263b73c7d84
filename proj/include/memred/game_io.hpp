#pragma once

#include <iosfwd>
#include <string>

#include "memred/reductions.hpp"

namespace memred {

/// Parses the game file format. Keys are normative; unknown keys are
/// rejected with a validation_error. The returned game is validated.
Game parse_game(const std::string& text);
Game load_game(const std::string& path);

/// Serializes a game back to the same format (stable key and set order).
std::string serialize_game(const Game& game);

void save_game(const Game& game, const std::string& path);

/// Expanded game in the arena file format plus a "memory_of" annotation
/// table mapping each product vertex to its (memory, vertex) pair.
std::string serialize_simulated_game(const SimulatedGame& sim);

}  // namespace memred
