#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

#include "chordspace/chordspace.h"

namespace {

using namespace chordspace;

// Small deterministic generator so runs are comparable across machines.
struct Xorshift {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
};

const std::vector<std::string>& symbolPool() {
  static const std::vector<std::string> pool = {
      "CM7",  "Dm7",  "G7",    "Am7",   "Fmaj7", "Bm7b5", "E7b9",
      "Ebm7", "Ab13", "Dbmaj7", "G7sus4", "C6",   "F#o7",  "Bb7#5",
      "Dm7/G", "C/E",  "NC",    "A7",    "D9",    "Gm7",
  };
  return pool;
}

std::vector<ChordEvent> randomEvents(Xorshift& rng, int count) {
  std::vector<ChordEvent> events;
  events.reserve(count);
  for (int i = 0; i < count; ++i) {
    ChordEvent event;
    event.chord = parseChord(symbolPool()[rng.below(static_cast<int>(symbolPool().size()))]);
    event.beats = Beats(1 + rng.below(4));
    events.push_back(std::move(event));
  }
  return events;
}

std::vector<ChordClassSequence> benchSequences(int songs, int chords) {
  Xorshift rng;
  std::vector<ChordClassSequence> sequences;
  sequences.reserve(songs);
  for (int s = 0; s < songs; ++s)
    sequences.push_back(reduceSong(randomEvents(rng, chords), "song-" + std::to_string(s)));
  return sequences;
}

void BM_ParseChord(benchmark::State& state) {
  Xorshift rng;
  for (auto _ : state) {
    const std::string& symbol = symbolPool()[rng.below(static_cast<int>(symbolPool().size()))];
    benchmark::DoNotOptimize(parseChord(symbol));
  }
}
BENCHMARK(BM_ParseChord);

void BM_ReduceSong(benchmark::State& state) {
  Xorshift rng;
  const std::vector<ChordEvent> events = randomEvents(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduceSong(events, "bench"));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ReduceSong)->Arg(32)->Arg(256);

void BM_BuildModel(benchmark::State& state) {
  const auto sequences = benchSequences(static_cast<int>(state.range(0)), 40);
  for (auto _ : state) benchmark::DoNotOptimize(buildModelFromSequences(sequences));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildModel)->Arg(64)->Arg(512);

void BM_MembraneArea(benchmark::State& state) {
  const auto sequences = benchSequences(2, 40);
  const CooccurrenceModel model = buildModelFromSequences(sequences);
  const SongPath f = buildPath(sequences[0], model);
  const SongPath g = buildPath(sequences[1], model);
  MembraneParams params;
  params.samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(membraneArea(f, g, params));
}
BENCHMARK(BM_MembraneArea)->Arg(256)->Arg(1024)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
