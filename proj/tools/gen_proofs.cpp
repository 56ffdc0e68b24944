#include <filesystem>
#include <iostream>

#include "zxr/derived.hpp"
#include "zxr/zxd.hpp"

// Writes every shipped proof script into the given directory.
int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_proofs <dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& s : zxr::shipped_scripts()) zxr::write_text_file((dir / s.file).string(), zxr::to_jsonl(s.script));
  return 0;
}
