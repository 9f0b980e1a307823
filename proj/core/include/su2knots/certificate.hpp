#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace su2knots {

// Line-delimited "key: value" document with a fixed field order, so that
// runs with identical inputs produce byte-identical text.  The first two
// fields are always schema-version and command.  Check results repeat
// under the key "check" as "<name> <pass|fail> <margin>".
class CertificateDocument {
public:
  CertificateDocument() = default;
  CertificateDocument(int schema_version, std::string command);

  void add(std::string key, std::string value);
  void add_check(const std::string& name, bool pass, const std::string& margin);

  const std::vector<std::pair<std::string, std::string>>& fields() const {
    return fields_;
  }
  int schema_version() const;
  std::string command() const;
  // First value for a key, or empty string.
  std::string value(std::string_view key) const;

  struct Check {
    std::string name;
    bool pass;
    std::string margin;
  };
  std::vector<Check> checks() const;
  bool all_checks_pass() const;

  std::string serialize() const;
  static CertificateDocument parse(std::string_view text);

  bool operator==(const CertificateDocument&) const = default;

private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

// Fixed-width-free deterministic formatting: 15 significant digits,
// negative zero normalized.
std::string format_real(double v);

}  // namespace su2knots
