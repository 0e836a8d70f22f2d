// Small shared types and the error taxonomy used across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace kifmm {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }

// Bad caller input: out-of-range keys, inconsistent sizes, points outside
// the domain, malformed configuration.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Filesystem failures while reading or writing particle files or caches.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical breakdown (unusable pseudo-inverse, non-finite matrices).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cache archive that is structurally valid but was built for a different
// configuration or format version.  Callers typically rebuild.
class CacheMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cache archive that cannot be parsed at all (truncated, bad magic, ...).
class CorruptArchive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kifmm
