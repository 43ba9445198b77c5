// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHROMA_ERRORS_HPP
#define CHROMA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chroma {

/// Base class for all input-validation failures.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// d(a,c) > d(a,b) + d(b,c) for some point triple (a,b,c).
class TriangleViolation : public ValidationError {
 public:
  TriangleViolation(std::size_t a, std::size_t b, std::size_t c)
      : ValidationError("triangle inequality violated on point triple (" + std::to_string(a) +
                        "," + std::to_string(b) + "," + std::to_string(c) + ")"),
        a_(a),
        b_(b),
        c_(c) {}
  std::size_t a() const { return a_; }
  std::size_t b() const { return b_; }
  std::size_t c() const { return c_; }

 private:
  std::size_t a_, b_, c_;
};

class NegativeWeight : public ValidationError {
 public:
  explicit NegativeWeight(const std::string& what) : ValidationError(what) {}
};

class NonPrimeField : public ValidationError {
 public:
  explicit NonPrimeField(long long p)
      : ValidationError("field modulus " + std::to_string(p) + " is not prime") {}
};

/// A facility id/index that does not belong to the instance.
class UnknownFacility : public std::runtime_error {
 public:
  explicit UnknownFacility(const std::string& what) : std::runtime_error(what) {}
};

/// A client has no facility within the working radius; callers must purge first.
class UncoveredClient : public std::runtime_error {
 public:
  explicit UncoveredClient(std::size_t client)
      : std::runtime_error("client " + std::to_string(client) +
                           " has no facility within the working radius"),
        client_(client) {}
  std::size_t client() const { return client_; }

 private:
  std::size_t client_;
};

/// An exhaustive procedure was asked to run beyond its configured size cap.
class SizeLimitExceeded : public std::runtime_error {
 public:
  explicit SizeLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A guess handed to a phase does not satisfy that phase's consistency rules.
class InconsistentGuess : public std::runtime_error {
 public:
  explicit InconsistentGuess(const std::string& what) : std::runtime_error(what) {}
};

/// gain(f,c) is only defined for facilities within the working radius of c.
class FacilityTooFar : public std::runtime_error {
 public:
  FacilityTooFar(std::size_t facility, std::size_t client)
      : std::runtime_error("facility " + std::to_string(facility) + " is farther than r from client " +
                           std::to_string(client)) {}
};

/// The guess enumeration outgrew the configured limits.
class GuessSpaceExceeded : public std::runtime_error {
 public:
  explicit GuessSpaceExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// The field is too small for the requested randomized procedure.
class PrimeTooSmall : public std::runtime_error {
 public:
  explicit PrimeTooSmall(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chroma

#endif  // CHROMA_ERRORS_HPP
