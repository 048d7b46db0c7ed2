// Copyright 2026 The ncverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NCVERIFY_ERRORS_H_
#define NCVERIFY_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ncverify {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The model file could not be read.
class FileError : public Error {
 public:
  using Error::Error;
};

// The model is structurally invalid: unknown kind or item, duplicate name,
// illegal association, wrong Link degree, and so on.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class UnknownNode : public Error {
 public:
  explicit UnknownNode(const std::string& name)
      : Error("unknown node '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// A node that should be owned by a Config is not attached to one.
class OrphanError : public Error {
 public:
  explicit OrphanError(const std::string& name)
      : Error("node '" + name + "' is not owned by any Config"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

}  // namespace ncverify

#endif  // NCVERIFY_ERRORS_H_
