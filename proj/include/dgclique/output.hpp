#ifndef DGCLIQUE_OUTPUT_HPP
#define DGCLIQUE_OUTPUT_HPP

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>

#include "dgclique/core.hpp"

namespace dgclique {

enum class CliqueFormat { kJsonl, kCsv };

// jsonl: {"members":["a","b"],"t_a":0,"t_b":4}
// csv:   a;b|0|4
// One clique per line, in the order given.
void write_cliques(std::ostream& out, const CliqueSet& cliques,
                   const TemporalNetwork& network, CliqueFormat format);

std::string format_clique(const Clique& c, const TemporalNetwork& network,
                          CliqueFormat format);

// Writes through a temporary sibling file that is renamed over `path` only if
// `write` returns normally. Throws std::runtime_error on I/O failure.
void write_file_atomically(const std::filesystem::path& path,
                           const std::function<void(std::ostream&)>& write);

}  // namespace dgclique

#endif  // DGCLIQUE_OUTPUT_HPP
