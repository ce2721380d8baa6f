#pragma once

#include <stdexcept>
#include <string>

namespace polynet {

// Every failure the library can produce, as a typed code. Invalid inputs and
// unsupported class/setting combinations are hard errors, never silent
// fallbacks or approximations.
enum class Errc {
  UnsupportedCombination,
  NegativeDiscriminant,
  NestedRadical,
  MixedRadicals,
  DivisionByZero,
  Overflow,
  JOutOfRange,
  RhoOutOfRange,
  SyntaxError,
  DuplicateVertex,
  UnknownVertexReference,
  DisconnectedNetwork,
  IsolatedVertex,
  DegreeCapExceeded,
  EmptyNetwork,
  BridgeInBulkNetwork,
  UnsupportedNetwork,
  NotABridgePair,
  NMaxTooLarge,
  InvalidFugacity,
  InsufficientData,
  NonPositiveCount,
  BadCensusFile,
  InternalInconsistency,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::UnsupportedCombination: return "UnsupportedCombination";
    case Errc::NegativeDiscriminant:   return "NegativeDiscriminant";
    case Errc::NestedRadical:          return "NestedRadical";
    case Errc::MixedRadicals:          return "MixedRadicals";
    case Errc::DivisionByZero:         return "DivisionByZero";
    case Errc::Overflow:               return "Overflow";
    case Errc::JOutOfRange:            return "JOutOfRange";
    case Errc::RhoOutOfRange:          return "RhoOutOfRange";
    case Errc::SyntaxError:            return "SyntaxError";
    case Errc::DuplicateVertex:        return "DuplicateVertex";
    case Errc::UnknownVertexReference: return "UnknownVertexReference";
    case Errc::DisconnectedNetwork:    return "DisconnectedNetwork";
    case Errc::IsolatedVertex:         return "IsolatedVertex";
    case Errc::DegreeCapExceeded:      return "DegreeCapExceeded";
    case Errc::EmptyNetwork:           return "EmptyNetwork";
    case Errc::BridgeInBulkNetwork:    return "BridgeInBulkNetwork";
    case Errc::UnsupportedNetwork:     return "UnsupportedNetwork";
    case Errc::NotABridgePair:         return "NotABridgePair";
    case Errc::NMaxTooLarge:           return "NMaxTooLarge";
    case Errc::InvalidFugacity:        return "InvalidFugacity";
    case Errc::InsufficientData:       return "InsufficientData";
    case Errc::NonPositiveCount:       return "NonPositiveCount";
    case Errc::BadCensusFile:          return "BadCensusFile";
    case Errc::InternalInconsistency:  return "InternalInconsistency";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, int line = 0, int col = 0)
      : std::runtime_error(format(code, msg, line, col)),
        code_(code), line_(line), col_(col) {}

  Errc code() const { return code_; }
  int line() const { return line_; }  // 1-based; 0 when not file-related
  int col() const { return col_; }

 private:
  static std::string format(Errc code, const std::string& msg, int line, int col) {
    std::string s = errc_name(code);
    if (line > 0) {
      s += " at line " + std::to_string(line);
      if (col > 0) s += ", col " + std::to_string(col);
    }
    s += ": ";
    s += msg;
    return s;
  }

  Errc code_;
  int line_;
  int col_;
};

}  // namespace polynet
