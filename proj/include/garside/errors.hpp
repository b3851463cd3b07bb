#pragma once

#include <stdexcept>
#include <string>

namespace garside {

enum class Errc {
  NonRegular,
  Disconnected,
  UnknownCell,
  Tie,
  NotQmh,
  NotMh,
  NotFlat,
  NotInvolutive,
  NotSimplicial,
  NotPositive,
  ZeroNormal,
  BadSignChar,
  RaggedLengths,
  NotCentrallySymmetric,
  MissingZeroVector,
  NoTopes,
  NotGraded,
  NoCircuits,
  ExplosionGuard,
  NotUniqueExtremum,
  SourceMismatch,
  NotComposable,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace garside
