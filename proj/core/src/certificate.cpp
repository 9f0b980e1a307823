#include "su2knots/certificate.hpp"

#include <cstdio>
#include <sstream>

#include "su2knots/errors.hpp"

namespace su2knots {

CertificateDocument::CertificateDocument(int schema_version, std::string command) {
  add("schema-version", std::to_string(schema_version));
  add("command", std::move(command));
}

void CertificateDocument::add(std::string key, std::string value) {
  if (key.empty() || key.find(':') != std::string::npos ||
      key.find('\n') != std::string::npos || value.find('\n') != std::string::npos) {
    throw InputError("CertificateDocument: key/value must be single-line, ':'-free key");
  }
  fields_.emplace_back(std::move(key), std::move(value));
}

void CertificateDocument::add_check(const std::string& name, bool pass,
                                    const std::string& margin) {
  add("check", name + (pass ? " pass " : " fail ") + margin);
}

int CertificateDocument::schema_version() const {
  if (fields_.empty() || fields_[0].first != "schema-version") {
    throw InputError("CertificateDocument: missing schema-version");
  }
  return std::stoi(fields_[0].second);
}

std::string CertificateDocument::command() const {
  if (fields_.size() < 2 || fields_[1].first != "command") {
    throw InputError("CertificateDocument: missing command");
  }
  return fields_[1].second;
}

std::string CertificateDocument::value(std::string_view key) const {
  for (const auto& [k, v] : fields_) {
    if (k == key) return v;
  }
  return {};
}

std::vector<CertificateDocument::Check> CertificateDocument::checks() const {
  std::vector<Check> out;
  for (const auto& [k, v] : fields_) {
    if (k != "check") continue;
    const std::size_t first = v.find(' ');
    if (first == std::string::npos) throw InputError("CertificateDocument: bad check line");
    const std::size_t second = v.find(' ', first + 1);
    const std::string status =
        v.substr(first + 1, second == std::string::npos ? std::string::npos
                                                        : second - first - 1);
    if (status != "pass" && status != "fail") {
      throw InputError("CertificateDocument: check status must be pass or fail");
    }
    out.push_back({v.substr(0, first), status == "pass",
                   second == std::string::npos ? "" : v.substr(second + 1)});
  }
  return out;
}

bool CertificateDocument::all_checks_pass() const {
  for (const Check& c : checks()) {
    if (!c.pass) return false;
  }
  return true;
}

std::string CertificateDocument::serialize() const {
  std::ostringstream os;
  for (const auto& [k, v] : fields_) {
    os << k << ": " << v << '\n';
  }
  return os.str();
}

CertificateDocument CertificateDocument::parse(std::string_view text) {
  CertificateDocument doc;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      throw InputError("CertificateDocument: missing final newline");
    }
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    const std::size_t sep = line.find(": ");
    if (sep == std::string_view::npos) {
      throw InputError("CertificateDocument: line without 'key: value' shape");
    }
    doc.fields_.emplace_back(std::string(line.substr(0, sep)),
                             std::string(line.substr(sep + 2)));
  }
  doc.schema_version();
  doc.command();
  return doc;
}

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // collapse -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace su2knots
