#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mlnet {

enum class errc {
  self_loop_rejected,
  vertex_not_found,
  io_error,
  empty_corpus,
  malformed_treebank,
  malformed_file,
  unsyllabifiable,
  lexicon_parse_error,
  not_a_treebank,
  duplicate_layer,
  multiplex_violation,
  not_comparable,
  undefined,
  no_layers,
  invalid_argument,
  config_error,
};

std::string_view to_string(errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  errc code() const noexcept { return code_; }
  // Message without the code prefix, for re-throwing with more context.
  const std::string& detail() const noexcept { return detail_; }

  // Configuration problems are the caller's to fix; everything else is data.
  bool is_config_error() const noexcept {
    return code_ == errc::config_error || code_ == errc::invalid_argument;
  }

 private:
  errc code_;
  std::string detail_;
};

inline std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::self_loop_rejected: return "SelfLoopRejected";
    case errc::vertex_not_found: return "VertexNotFound";
    case errc::io_error: return "IoError";
    case errc::empty_corpus: return "EmptyCorpus";
    case errc::malformed_treebank: return "MalformedTreebank";
    case errc::malformed_file: return "MalformedFile";
    case errc::unsyllabifiable: return "Unsyllabifiable";
    case errc::lexicon_parse_error: return "LexiconParseError";
    case errc::not_a_treebank: return "NotATreebank";
    case errc::duplicate_layer: return "DuplicateLayer";
    case errc::multiplex_violation: return "MultiplexViolation";
    case errc::not_comparable: return "NotComparable";
    case errc::undefined: return "Undefined";
    case errc::no_layers: return "NoLayers";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::config_error: return "ConfigError";
  }
  return "Error";
}

}  // namespace mlnet
