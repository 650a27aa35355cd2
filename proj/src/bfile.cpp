#include "fibprod/bfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace fibprod {

namespace {

bool integer_token(const std::string& tok) {
  if (tok.empty()) return false;
  size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  return true;
}

}  // namespace

BFile parse_bfile(std::istream& in, const std::string& name_for_errors) {
  BFile bf;
  std::string line;
  long line_no = 0;
  bool have_prev = false;
  long prev_index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream ls(line.substr(start));
    std::string idx_tok, val_tok, extra;
    ls >> idx_tok >> val_tok;
    auto bad = [&](const std::string& why) {
      fail(errc::parse, name_for_errors + ":" + std::to_string(line_no) + ": " + why);
    };
    if (val_tok.empty()) bad("expected '<index> <value>'");
    if (ls >> extra) bad("trailing content '" + extra + "'");
    if (!integer_token(idx_tok) || !integer_token(val_tok))
      bad("non-integer token in '" + line + "'");
    long index = 0;
    try {
      index = std::stol(idx_tok);
    } catch (const std::exception&) {
      bad("index out of range");
    }
    if (have_prev && index <= prev_index) bad("indices must be strictly increasing");
    bf.entries.push_back({index, Integer(val_tok)});
    prev_index = index;
    have_prev = true;
  }
  return bf;
}

BFile parse_bfile_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::environment, "cannot open b-file '" + path + "'");
  return parse_bfile(in, path);
}

std::string format_bfile(const BFile& bf) {
  std::string out;
  for (const auto& e : bf.entries)
    out += std::to_string(e.index) + " " + e.value.get_str() + "\n";
  return out;
}

bool valid_sequence_id(const std::string& id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (size_t i = 1; i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  return true;
}

std::string bfile_filename(const std::string& id) {
  if (!valid_sequence_id(id)) fail(errc::parse, "bad sequence id '" + id + "'");
  return "b" + id.substr(1) + ".txt";
}

std::string OeisBinding::describe() const {
  std::string s = kind.describe();
  if (offset != 0) s += " at n" + std::string(offset > 0 ? "+" : "") + std::to_string(offset);
  return s;
}

OeisCheckResult check_binding(const OeisBinding& binding, const BFile& bf, long prefix_len) {
  OeisCheckResult res;
  res.id = binding.id;
  res.binding = binding.describe();
  switch (binding.encoding) {
    case OeisBinding::Encoding::direct: res.hypothesis = "integer terms as-is"; break;
    case OeisBinding::Encoding::numerator: res.hypothesis = "numerators of the terms"; break;
    case OeisBinding::Encoding::denominator: res.hypothesis = "denominators of the terms"; break;
  }
  switch (bf.source) {
    case BFile::Source::bundled: res.source = "bundled"; break;
    case BFile::Source::fetched: res.source = "fetched"; break;
    case BFile::Source::local: res.source = "local"; break;
  }
  for (const auto& e : bf.entries) {
    if (res.terms_checked >= prefix_len) break;
    Rational term = binding.kind.term(e.index + binding.offset);
    Integer expected;
    switch (binding.encoding) {
      case OeisBinding::Encoding::direct:
        if (term.get_den() != 1) {
          res.first_mismatch = e.index;
          res.detail = "term at n=" + std::to_string(e.index) + " is " + to_string(term) +
                       ", not an integer";
          return res;
        }
        expected = term.get_num();
        break;
      case OeisBinding::Encoding::numerator: expected = term.get_num(); break;
      case OeisBinding::Encoding::denominator: expected = term.get_den(); break;
    }
    ++res.terms_checked;
    if (expected != e.value) {
      res.first_mismatch = e.index;
      res.detail = "file has " + e.value.get_str() + ", computed " + expected.get_str() +
                   " at index " + std::to_string(e.index);
      return res;
    }
  }
  return res;
}

namespace {

std::vector<OeisBinding> build_bindings() {
  using Tag = SeqKind::Tag;
  using Enc = OeisBinding::Encoding;
  std::vector<OeisBinding> v;
  auto seq = [&v](const char* id, Tag tag, long a, long b, long offset = 0) {
    v.push_back(OeisBinding{id,
                            SeqKind::make(tag, SequenceParams(Rational(a), Rational(b))),
                            offset, Enc::direct, "", false});
  };
  // F column of the parameter table.
  seq("A000045", Tag::gen_fib, 1, 1);
  seq("A000129", Tag::gen_fib, 2, 1);
  seq("A006190", Tag::gen_fib, 3, 1);
  seq("A001076", Tag::gen_fib, 4, 1);
  seq("A052918", Tag::gen_fib, 5, 1);
  seq("A005668", Tag::gen_fib, 6, 1);
  seq("A054413", Tag::gen_fib, 7, 1);
  seq("A041025", Tag::gen_fib, 8, 1, 1);  // convergent denominators; file starts at F(1)
  seq("A099371", Tag::gen_fib, 9, 1);
  seq("A001045", Tag::gen_fib, 1, 2);
  seq("A006130", Tag::gen_fib, 1, 3);
  seq("A002605", Tag::gen_fib, 2, 2);
  seq("A015518", Tag::gen_fib, 2, 3);
  seq("A007482", Tag::gen_fib, 3, 2);
  seq("A030195", Tag::gen_fib, 3, 3);
  // L column.
  seq("A000032", Tag::gen_lucas, 1, 1);
  seq("A002203", Tag::gen_lucas, 2, 1);
  seq("A006497", Tag::gen_lucas, 3, 1);
  seq("A014448", Tag::gen_lucas, 4, 1);
  seq("A087130", Tag::gen_lucas, 5, 1);
  seq("A085447", Tag::gen_lucas, 6, 1);
  seq("A086902", Tag::gen_lucas, 7, 1);
  // The source table lists A086902 for the a=8 column as well; both cannot
  // hold. The fixture follows the a=7 row, so this binding is expected to
  // mismatch and the mismatch is the finding.
  {
    OeisBinding dup{"A086902",
                    SeqKind::make(Tag::gen_lucas, SequenceParams(Rational(8), Rational(1))), 0,
                    Enc::direct, "duplicate id claim for the a=8 Lucas column", true};
    v.push_back(std::move(dup));
  }
  seq("A087798", Tag::gen_lucas, 9, 1);
  seq("A014551", Tag::gen_lucas, 1, 2);
  seq("A075118", Tag::gen_lucas, 1, 3);
  seq("A080040", Tag::gen_lucas, 2, 2);
  seq("A102345", Tag::gen_lucas, 2, 3);
  seq("A206776", Tag::gen_lucas, 3, 2);
  seq("A172012", Tag::gen_lucas, 3, 3);
  // Product sequences. The H-products are rational-valued; the bundled
  // hypothesis reads the files as numerators.
  v.push_back(OeisBinding{"A372199",
                          SeqKind::make(Tag::product_hf, SequenceParams(Rational(1), Rational(1))),
                          0, Enc::numerator, "", false});
  v.push_back(OeisBinding{"A372210",
                          SeqKind::make(Tag::product_hf, SequenceParams(Rational(2), Rational(1))),
                          0, Enc::numerator, "", false});
  v.push_back(OeisBinding{"A119694",
                          SeqKind::make(Tag::product_cf, SequenceParams(Rational(1), Rational(1))),
                          0, Enc::direct, "", false});
  v.push_back(OeisBinding{"A372216",
                          SeqKind::make(Tag::product_cf, SequenceParams(Rational(2), Rational(1))),
                          0, Enc::direct, "", false});
  // Worked-example sequences with negative b.
  seq("A010892", Tag::gen_fib, 1, -1, 1);
  seq("A002249", Tag::gen_lucas, 1, -2);
  return v;
}

}  // namespace

const std::vector<OeisBinding>& bundled_bindings() {
  static const std::vector<OeisBinding> bindings = build_bindings();
  return bindings;
}

std::vector<const OeisBinding*> bindings_for(const std::string& id) {
  std::vector<const OeisBinding*> out;
  for (const auto& b : bundled_bindings())
    if (b.id == id) out.push_back(&b);
  return out;
}

}  // namespace fibprod
