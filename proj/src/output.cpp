#include "dgclique/output.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

#include "json.hpp"

namespace dgclique {

std::string format_clique(const Clique& c, const TemporalNetwork& network,
                          CliqueFormat format) {
  std::string line;
  if (format == CliqueFormat::kJsonl) {
    line = "{\"members\":[";
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      if (i > 0) line += ',';
      line += nlohmann::json(network.label(c.members[i])).dump();
    }
    line += "],\"t_a\":" + std::to_string(c.interval.start) +
            ",\"t_b\":" + std::to_string(c.interval.end) + "}";
  } else {
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      if (i > 0) line += ';';
      line += network.label(c.members[i]);
    }
    line += '|' + std::to_string(c.interval.start) + '|' +
            std::to_string(c.interval.end);
  }
  return line;
}

void write_cliques(std::ostream& out, const CliqueSet& cliques,
                   const TemporalNetwork& network, CliqueFormat format) {
  for (const auto& c : cliques) out << format_clique(c, network, format) << '\n';
}

void write_file_atomically(const std::filesystem::path& path,
                           const std::function<void(std::ostream&)>& write) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  try {
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot open " + tmp.string());
      write(out);
      out.flush();
      if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw;
  }
}

}  // namespace dgclique
