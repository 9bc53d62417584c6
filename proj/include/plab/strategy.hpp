#pragma once

// Deterministic controllers for one side of the game.
//
// Protocol: cops place, the robber places seeing the cops, then rounds
// alternate: CopStrategy::respond(robber) returns every cop's new vertex
// (identity order), RobberStrategy::respond(cops) returns the robber's new
// vertex. Equal memo_key() values must imply equal future behavior.

#include <cstdint>
#include <cstring>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "plab/graph.hpp"
#include "plab/rules.hpp"

namespace plab {

class StrategyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CopStrategy {
 public:
  virtual ~CopStrategy() = default;

  virtual std::string name() const = 0;
  virtual int cop_count() const = 0;
  virtual MovementRule rule() const = 0;

  virtual std::vector<Vertex> place() = 0;
  virtual std::vector<Vertex> respond(Vertex robber) = 0;

  virtual std::string memo_key() const = 0;
  virtual std::unique_ptr<CopStrategy> clone() const = 0;
};

class RobberStrategy {
 public:
  virtual ~RobberStrategy() = default;

  virtual std::string name() const = 0;
  virtual MovementRule rule() const = 0;

  // `cops` is sorted.
  virtual Vertex place(std::span<const Vertex> cops) = 0;
  virtual Vertex respond(std::span<const Vertex> cops) = 0;

  virtual std::string memo_key() const = 0;
  virtual std::unique_ptr<RobberStrategy> clone() const = 0;
};

// Byte-level builder for memo keys.
class KeyBuilder {
 public:
  KeyBuilder& add(std::int64_t v) {
    char buf[sizeof v];
    std::memcpy(buf, &v, sizeof v);
    key_.append(buf, sizeof v);
    return *this;
  }
  KeyBuilder& add(std::span<const Vertex> vs) {
    add(static_cast<std::int64_t>(vs.size()));
    for (Vertex v : vs) add(v);
    return *this;
  }
  KeyBuilder& add(const std::string& nested) {
    add(static_cast<std::int64_t>(nested.size()));
    key_ += nested;
    return *this;
  }
  std::string str() const { return key_; }

 private:
  std::string key_;
};

}  // namespace plab
