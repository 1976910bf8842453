// Batch g2p: one token per stdin line, one result line per token on stdout.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "tg2p/lexicon.hpp"
#include "tg2p/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Turkish grapheme-to-phoneme converter"};

  tg2p::BatchOptions batch;
  std::string lexicon_dir = tg2p::default_lexicon_dir().string();
  app.add_option("--mode", batch.options.mode, "asr (plain phones) or tts (syllables and stress)")
      ->transform(CLI::CheckedTransformer(std::map<std::string, tg2p::Mode>{{"asr", tg2p::Mode::kAsr},
                                                                            {"tts", tg2p::Mode::kTts}}));
  app.add_flag("--variants", batch.options.variants, "add fast-speech variants");
  app.add_option("--lexicon-dir", lexicon_dir, "directory holding the lexicon tables");
  app.add_option("--format", batch.format, "tsv or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, tg2p::Format>{{"tsv", tg2p::Format::kTsv}, {"json", tg2p::Format::kJson}}));
  app.add_option("--jobs", batch.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  CLI11_PARSE(app, argc, argv);

  std::shared_ptr<const tg2p::Lexicon> lexicon;
  try {
    lexicon = tg2p::load_lexicon(lexicon_dir);
  } catch (const tg2p::Error& e) {
    std::cerr << "tg2p: " << e.what() << '\n';
    return 1;
  }

  std::ios::sync_with_stdio(false);
  try {
    const tg2p::BatchStats stats = tg2p::run_batch(*lexicon, std::cin, std::cout, batch);
    return stats.errors == 0 ? 0 : 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "tg2p: " << e.what() << '\n';
    return 1;
  }
}
