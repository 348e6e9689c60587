#include "fungal/cfg_io.hpp"

#include <fstream>
#include <sstream>

#include "fungal/errors.hpp"

namespace fungal {

namespace {

// Strips one trailing '\r' so CRLF files parse like LF files.
std::string chomp(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::int64_t parse_int(std::string_view text, const char* what) {
  std::size_t pos = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(std::string(text), &pos);
  } catch (const std::exception&) {
    throw CfgParseError(std::string("bad ") + what + ": '" +
                        std::string(text) + "'");
  }
  if (pos != text.size()) {
    throw CfgParseError(std::string("bad ") + what + ": '" +
                        std::string(text) + "'");
  }
  return value;
}

// Extracts the value of `key=` from a header token like "origin=-4,-3".
std::string_view field(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() + 1 || !token.starts_with(key) ||
      token[key.size()] != '=') {
    throw CfgParseError("expected '" + std::string(key) +
                        "=...' in header, got '" + std::string(token) + "'");
  }
  return token.substr(key.size() + 1);
}

}  // namespace

CfgFile parse_cfg(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw CfgParseError("empty input");
  header = chomp(header);

  std::istringstream hs(header);
  std::string magic, version, z_tok, origin_tok, size_tok;
  if (!(hs >> magic >> version >> z_tok >> origin_tok >> size_tok) ||
      magic != "fungal-cfg" || version != "v1") {
    throw CfgParseError("bad header: '" + header + "'");
  }

  CfgFile out;
  out.scheme = parse_scheme(field(z_tok, "Z"));

  std::string_view origin_val = field(origin_tok, "origin");
  auto comma = origin_val.find(',');
  if (comma == std::string_view::npos) {
    throw CfgParseError("origin must be '<x>,<y>'");
  }
  out.window.origin.x = static_cast<std::int32_t>(
      parse_int(origin_val.substr(0, comma), "origin x"));
  out.window.origin.y = static_cast<std::int32_t>(
      parse_int(origin_val.substr(comma + 1), "origin y"));

  std::string_view size_val = field(size_tok, "size");
  auto cross = size_val.find('x');
  if (cross == std::string_view::npos) {
    throw CfgParseError("size must be '<w>x<h>'");
  }
  out.window.width = parse_int(size_val.substr(0, cross), "width");
  out.window.height = parse_int(size_val.substr(cross + 1), "height");
  if (out.window.width < 1 || out.window.height < 1) {
    throw CfgParseError("size must be at least 1x1");
  }

  for (std::int64_t row = 0; row < out.window.height; ++row) {
    std::string line;
    if (!std::getline(in, line)) {
      throw CfgParseError("expected " + std::to_string(out.window.height) +
                          " rows, got " + std::to_string(row));
    }
    line = chomp(line);
    if (static_cast<std::int64_t>(line.size()) != out.window.width) {
      throw CfgParseError("row " + std::to_string(row) + " has " +
                          std::to_string(line.size()) + " cells, expected " +
                          std::to_string(out.window.width));
    }
    for (std::int64_t col = 0; col < out.window.width; ++col) {
      char ch = line[static_cast<std::size_t>(col)];
      Grain g = 0;
      if (ch == '.') {
        g = 0;
      } else if (ch >= '0' && ch <= '5') {
        g = static_cast<Grain>(ch - '0');
      } else {
        throw CfgParseError("row " + std::to_string(row) + " col " +
                            std::to_string(col) + ": illegal cell '" +
                            std::string(1, ch) + "'");
      }
      if (g != 0) {
        out.config.set(out.window.origin + Cell{static_cast<std::int32_t>(col),
                                                static_cast<std::int32_t>(row)},
                       g);
      }
    }
  }
  return out;
}

CfgFile parse_cfg(const std::string& text) {
  std::istringstream in(text);
  return parse_cfg(in);
}

CfgFile load_cfg(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CfgParseError("cannot open '" + path + "'");
  return parse_cfg(in);
}

std::string format_cfg(const UpdateScheme& z, const Configuration& c,
                       std::optional<Rect> window, char zero_char) {
  Rect w = window.value_or(
      c.bounding_box().value_or(Rect{{0, 0}, 1, 1}));
  std::ostringstream out;
  out << "fungal-cfg v1 Z=" << z.word() << " origin=" << w.origin.x << ','
      << w.origin.y << " size=" << w.width << 'x' << w.height << '\n';
  for (std::int64_t row = 0; row < w.height; ++row) {
    for (std::int64_t col = 0; col < w.width; ++col) {
      Grain g = c.at(w.origin + Cell{static_cast<std::int32_t>(col),
                                     static_cast<std::int32_t>(row)});
      out << (g == 0 ? zero_char : static_cast<char>('0' + g));
    }
    out << '\n';
  }
  return out.str();
}

void save_cfg(const std::string& path, const UpdateScheme& z,
              const Configuration& c, std::optional<Rect> window,
              char zero_char) {
  std::ofstream out(path);
  if (!out) throw CfgParseError("cannot open '" + path + "' for writing");
  out << format_cfg(z, c, window, zero_char);
}

Configuration crop(const Configuration& c, Rect w) {
  Configuration out;
  for (const auto& [cell, grain] : c.cells()) {
    if (w.contains(cell)) out.set(cell, grain);
  }
  return out;
}

}  // namespace fungal
