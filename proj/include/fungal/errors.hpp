#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "fungal/geometry.hpp"

namespace fungal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- scheme -------------------------------------------------------------

struct EmptyWord : Error {
  EmptyWord() : Error("scheme word is empty") {}
};

struct IllegalSymbol : Error {
  std::size_t position;
  explicit IllegalSymbol(std::size_t pos)
      : Error("illegal symbol at position " + std::to_string(pos) +
              " (expected H or V)"),
        position(pos) {}
};

struct MonotoneWord : Error {
  MonotoneWord() : Error("scheme word uses only one symbol") {}
};

struct NotPrimitive : Error {
  NotPrimitive() : Error("scheme word is a proper power of a shorter word") {}
};

// ---- grid / configuration text format -----------------------------------

struct GrainOverflow : Error {
  Cell cell;
  unsigned value;
  GrainOverflow(Cell c, unsigned v)
      : Error("cell (" + std::to_string(c.x) + "," + std::to_string(c.y) +
              ") would reach " + std::to_string(v) + " grains (max 5)"),
        cell(c),
        value(v) {}
};

struct CfgParseError : Error {
  explicit CfgParseError(const std::string& what) : Error(what) {}
};

// ---- lattice -------------------------------------------------------------

struct NotDiagonal : Error {
  NotDiagonal() : Error("blocks are not diagonally connected") {}
  explicit NotDiagonal(const std::string& what) : Error(what) {}
};

struct BadSinkIndex : Error {
  int index;
  explicit BadSinkIndex(int l)
      : Error("sink index " + std::to_string(l) + " outside 1..k"), index(l) {}
};

struct PinClash : Error {
  std::string pin;
  explicit PinClash(const std::string& name)
      : Error("pin name '" + name + "' bound to different cells"), pin(name) {}
};

// ---- gadgets ---------------------------------------------------------------

struct BrokenChain : Error {
  explicit BrokenChain(const std::string& what) : Error(what) {}
};

struct IllegalDiagonalShortcut : Error {
  explicit IllegalDiagonalShortcut(const std::string& what) : Error(what) {}
};

struct FootprintCollision : Error {
  explicit FootprintCollision(const std::string& what) : Error(what) {}
};

struct DelayOutOfRange : Error {
  explicit DelayOutOfRange(const std::string& what) : Error(what) {}
};

struct HorizonTooSmall : Error {
  explicit HorizonTooSmall(const std::string& what) : Error(what) {}
};

struct PolarityMismatch : Error {
  explicit PolarityMismatch(const std::string& what) : Error(what) {}
};

struct OrientationViolation : Error {
  explicit OrientationViolation(const std::string& what) : Error(what) {}
};

// ---- circuit ---------------------------------------------------------------

struct NetlistError : Error {
  explicit NetlistError(const std::string& what) : Error(what) {}
};

struct ForwardReference : NetlistError {
  explicit ForwardReference(const std::string& ref)
      : NetlistError("reference to undefined name '" + ref + "'") {}
};

struct MultipleOutputs : NetlistError {
  MultipleOutputs() : NetlistError("netlist declares more than one output") {}
};

struct FanInExceeded : NetlistError {
  explicit FanInExceeded(const std::string& gate)
      : NetlistError("gate '" + gate + "' exceeds fan-in 2") {}
};

struct UnknownGateKind : NetlistError {
  explicit UnknownGateKind(const std::string& kind)
      : NetlistError("unknown gate kind '" + kind + "'") {}
};

struct ArityMismatch : Error {
  explicit ArityMismatch(const std::string& what) : Error(what) {}
};

struct DegenerateScheme : Error {
  DegenerateScheme()
      : Error("scheme has a single H or single V per cycle; blocks degenerate") {}
};

struct CircuitTooLarge : Error {
  explicit CircuitTooLarge(const std::string& what) : Error(what) {}
};

struct SinkFailure : Error {
  explicit SinkFailure(const std::string& what) : Error(what) {}
};

}  // namespace fungal
