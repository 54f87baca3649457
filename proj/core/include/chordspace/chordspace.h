#pragma once

// Umbrella header for the chordspace library.

#include "chordspace/beats.h"
#include "chordspace/chord_class.h"
#include "chordspace/chord_symbol.h"
#include "chordspace/cooccurrence.h"
#include "chordspace/corpus_io.h"
#include "chordspace/errors.h"
#include "chordspace/key_signature.h"
#include "chordspace/pipeline.h"
#include "chordspace/pitch.h"
#include "chordspace/similarity.h"
#include "chordspace/song.h"
#include "chordspace/song_path.h"
#include "chordspace/vec63.h"
