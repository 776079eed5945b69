#!/usr/bin/env python3
"""Regenerate the bundled IPA pronunciation snapshot.

The snapshot ships with the package so rhyme detection and syllable counting
work without any external grapheme-to-phoneme engine installed.  Entries are
kept here as ARPABET (CMU pronouncing dictionary conventions, one primary US
pronunciation per word) and emitted as tab-separated IPA with stress marks:

    word<TAB>space-separated IPA phonemes

A ``ˈ`` / ``ˌ`` prefix on a vowel symbol marks a primary / secondary stressed
nucleus.  Run from the repo root:

    python tools/build_pron_dict.py
"""

from pathlib import Path

OUT_PATH = Path(__file__).resolve().parents[1] / "src" / "lyricsmith" / "data" / "pronunciations.tsv"

# ARPABET -> IPA. AH and ER depend on stress and are handled in to_ipa().
ARPABET_TO_IPA = {
    "AA": "ɑ", "AE": "æ", "AO": "ɔ", "AW": "aʊ", "AY": "aɪ",
    "EH": "ɛ", "EY": "eɪ", "IH": "ɪ", "IY": "i", "OW": "oʊ",
    "OY": "ɔɪ", "UH": "ʊ", "UW": "u",
    "B": "b", "CH": "tʃ", "D": "d", "DH": "ð", "F": "f", "G": "g",
    "HH": "h", "JH": "dʒ", "K": "k", "L": "l", "M": "m", "N": "n",
    "NG": "ŋ", "P": "p", "R": "ɹ", "S": "s", "SH": "ʃ", "T": "t",
    "TH": "θ", "V": "v", "W": "w", "Y": "j", "Z": "z", "ZH": "ʒ",
}

STRESS_PREFIX = {"1": "ˈ", "2": "ˌ", "0": ""}

LEXICON = {
    "a": "AH0",
    "about": "AH0 B AW1 T",
    "above": "AH0 B AH1 V",
    "across": "AH0 K R AO1 S",
    "after": "AE1 F T ER0",
    "again": "AH0 G EH1 N",
    "against": "AH0 G EH1 N S T",
    "ago": "AH0 G OW1",
    "ain't": "EY1 N T",
    "all": "AO1 L",
    "alone": "AH0 L OW1 N",
    "along": "AH0 L AO1 NG",
    "already": "AO0 L R EH1 D IY0",
    "always": "AO1 L W EY2 Z",
    "am": "AE1 M",
    "an": "AE1 N",
    "and": "AH0 N D",
    "angel": "EY1 N JH AH0 L",
    "another": "AH0 N AH1 DH ER0",
    "answer": "AE1 N S ER0",
    "any": "EH1 N IY0",
    "anymore": "EH2 N IY0 M AO1 R",
    "anything": "EH1 N IY0 TH IH2 NG",
    "anywhere": "EH1 N IY0 W EH2 R",
    "apart": "AH0 P AA1 R T",
    "are": "AA1 R",
    "arms": "AA1 R M Z",
    "around": "AH0 R AW1 N D",
    "art": "AA1 R T",
    "as": "AE1 Z",
    "at": "AE1 T",
    "away": "AH0 W EY1",
    "baby": "B EY1 B IY0",
    "back": "B AE1 K",
    "bad": "B AE1 D",
    "bat": "B AE1 T",
    "be": "B IY1",
    "beat": "B IY1 T",
    "beating": "B IY1 T IH0 NG",
    "beautiful": "B Y UW1 T AH0 F AH0 L",
    "because": "B IH0 K AO1 Z",
    "been": "B IH1 N",
    "before": "B IH0 F AO1 R",
    "begin": "B IH0 G IH1 N",
    "behind": "B IH0 HH AY1 N D",
    "believe": "B IH0 L IY1 V",
    "bell": "B EH1 L",
    "beneath": "B IH0 N IY1 TH",
    "better": "B EH1 T ER0",
    "between": "B IH0 T W IY1 N",
    "beyond": "B IH0 AA1 N D",
    "black": "B L AE1 K",
    "blind": "B L AY1 N D",
    "blue": "B L UW1",
    "bold": "B OW1 L D",
    "bone": "B OW1 N",
    "boy": "B OY1",
    "breathe": "B R IY1 DH",
    "breathing": "B R IY1 DH IH0 NG",
    "bright": "B R AY1 T",
    "bring": "B R IH1 NG",
    "broken": "B R OW1 K AH0 N",
    "burn": "B ER1 N",
    "burned": "B ER1 N D",
    "burning": "B ER1 N IH0 NG",
    "but": "B AH1 T",
    "by": "B AY1",
    "call": "K AO1 L",
    "called": "K AO1 L D",
    "calling": "K AO1 L IH0 NG",
    "came": "K EY1 M",
    "can": "K AE1 N",
    "can't": "K AE1 N T",
    "car": "K AA1 R",
    "cat": "K AE1 T",
    "chain": "CH EY1 N",
    "chasing": "CH EY1 S IH0 NG",
    "chat": "CH AE1 T",
    "choosing": "CH UW1 Z IH0 NG",
    "city": "S IH1 T IY0",
    "climb": "K L AY1 M",
    "cold": "K OW1 L D",
    "come": "K AH1 M",
    "comes": "K AH1 M Z",
    "coming": "K AH1 M IH0 NG",
    "complete": "K AH0 M P L IY1 T",
    "control": "K AH0 N T R OW1 L",
    "could": "K UH1 D",
    "crazy": "K R EY1 Z IY0",
    "crown": "K R AW1 N",
    "cruising": "K R UW1 Z IH0 NG",
    "cry": "K R AY1",
    "crying": "K R AY1 IH0 NG",
    "dance": "D AE1 N S",
    "danced": "D AE1 N S T",
    "dancing": "D AE1 N S IH0 NG",
    "dark": "D AA1 R K",
    "day": "D EY1",
    "daylight": "D EY1 L AY2 T",
    "days": "D EY1 Z",
    "deep": "D IY1 P",
    "desire": "D IH0 Z AY1 ER0",
    "devil": "D EH1 V AH0 L",
    "diamond": "D AY1 M AH0 N D",
    "did": "D IH1 D",
    "divine": "D IH0 V AY1 N",
    "do": "D UW1",
    "does": "D AH1 Z",
    "dog": "D AO1 G",
    "doing": "D UW1 IH0 NG",
    "don't": "D OW1 N T",
    "done": "D AH1 N",
    "door": "D AO1 R",
    "down": "D AW1 N",
    "dream": "D R IY1 M",
    "dreaming": "D R IY1 M IH0 NG",
    "dreams": "D R IY1 M Z",
    "driving": "D R AY1 V IH0 NG",
    "drum": "D R AH1 M",
    "echo": "EH1 K OW0",
    "echoes": "EH1 K OW0 Z",
    "empty": "EH1 M P T IY0",
    "endless": "EH1 N D L AH0 S",
    "enough": "IH0 N AH1 F",
    "entire": "IH0 N T AY1 ER0",
    "evening": "IY1 V N IH0 NG",
    "ever": "EH1 V ER0",
    "every": "EH1 V R IY0",
    "everyone": "EH1 V R IY0 W AH2 N",
    "everything": "EH1 V R IY0 TH IH2 NG",
    "everywhere": "EH1 V R IY0 W EH2 R",
    "eye": "AY1",
    "eyes": "AY1 Z",
    "fade": "F EY1 D",
    "fading": "F EY1 D IH0 NG",
    "fall": "F AO1 L",
    "falling": "F AO1 L IH0 NG",
    "far": "F AA1 R",
    "farewell": "F EH2 R W EH1 L",
    "fast": "F AE1 S T",
    "feel": "F IY1 L",
    "feeling": "F IY1 L IH0 NG",
    "feels": "F IY1 L Z",
    "feet": "F IY1 T",
    "fell": "F EH1 L",
    "felt": "F EH1 L T",
    "few": "F Y UW1",
    "fight": "F AY1 T",
    "find": "F AY1 N D",
    "fine": "F AY1 N",
    "fire": "F AY1 ER0",
    "firelight": "F AY1 ER0 L AY2 T",
    "flame": "F L EY1 M",
    "flat": "F L AE1 T",
    "flight": "F L AY1 T",
    "floor": "F L AO1 R",
    "flow": "F L OW1",
    "fly": "F L AY1",
    "flying": "F L AY1 IH0 NG",
    "foolish": "F UW1 L IH0 SH",
    "for": "F AO1 R",
    "forever": "F ER0 EH1 V ER0",
    "found": "F AW1 N D",
    "free": "F R IY1",
    "friend": "F R EH1 N D",
    "friends": "F R EH1 N D Z",
    "from": "F R AH1 M",
    "full": "F UH1 L",
    "fun": "F AH1 N",
    "game": "G EY1 M",
    "garden": "G AA1 R D AH0 N",
    "gave": "G EY1 V",
    "get": "G EH1 T",
    "girl": "G ER1 L",
    "give": "G IH1 V",
    "gives": "G IH1 V Z",
    "glow": "G L OW1",
    "go": "G OW1",
    "goes": "G OW1 Z",
    "going": "G OW1 IH0 NG",
    "gold": "G OW1 L D",
    "golden": "G OW1 L D AH0 N",
    "gone": "G AO1 N",
    "gonna": "G AA1 N AH0",
    "good": "G UH1 D",
    "goodbye": "G UH2 D B AY1",
    "got": "G AA1 T",
    "gray": "G R EY1",
    "green": "G R IY1 N",
    "grew": "G R UW1",
    "ground": "G R AW1 N D",
    "grow": "G R OW1",
    "grown": "G R OW1 N",
    "guitar": "G IH0 T AA1 R",
    "had": "HH AE1 D",
    "hand": "HH AE1 N D",
    "hands": "HH AE1 N D Z",
    "happy": "HH AE1 P IY0",
    "harmony": "HH AA1 R M AH0 N IY0",
    "has": "HH AE1 Z",
    "hat": "HH AE1 T",
    "have": "HH AE1 V",
    "he": "HH IY1",
    "hear": "HH IH1 R",
    "heard": "HH ER1 D",
    "heart": "HH AA1 R T",
    "heartbeat": "HH AA1 R T B IY2 T",
    "hearts": "HH AA1 R T S",
    "heat": "HH IY1 T",
    "heaven": "HH EH1 V AH0 N",
    "held": "HH EH1 L D",
    "hello": "HH AH0 L OW1",
    "her": "HH ER1",
    "here": "HH IH1 R",
    "hey": "HH EY1",
    "hiding": "HH AY1 D IH0 NG",
    "high": "HH AY1",
    "higher": "HH AY1 ER0",
    "him": "HH IH1 M",
    "his": "HH IH1 Z",
    "hold": "HH OW1 L D",
    "holding": "HH OW1 L D IH0 NG",
    "home": "HH OW1 M",
    "hotel": "HH OW0 T EH1 L",
    "house": "HH AW1 S",
    "how": "HH AW1",
    "i": "AY1",
    "i'll": "AY1 L",
    "i'm": "AY1 M",
    "i've": "AY1 V",
    "if": "IH1 F",
    "in": "IH1 N",
    "insane": "IH0 N S EY1 N",
    "inside": "IH2 N S AY1 D",
    "into": "IH1 N T UW0",
    "is": "IH1 Z",
    "it": "IH1 T",
    "it's": "IH1 T S",
    "just": "JH AH1 S T",
    "keep": "K IY1 P",
    "keeps": "K IY1 P S",
    "kept": "K EH1 P T",
    "key": "K IY1",
    "king": "K IH1 NG",
    "knew": "N UW1",
    "know": "N OW1",
    "known": "N OW1 N",
    "knows": "N OW1 Z",
    "la": "L AA1",
    "late": "L EY1 T",
    "learn": "L ER1 N",
    "learned": "L ER1 N D",
    "leave": "L IY1 V",
    "leaving": "L IY1 V IH0 NG",
    "left": "L EH1 F T",
    "let": "L EH1 T",
    "letter": "L EH1 T ER0",
    "liar": "L AY1 ER0",
    "life": "L AY1 F",
    "light": "L AY1 T",
    "lightning": "L AY1 T N IH0 NG",
    "lights": "L AY1 T S",
    "like": "L AY1 K",
    "line": "L AY1 N",
    "lines": "L AY1 N Z",
    "little": "L IH1 T AH0 L",
    "live": "L IH1 V",
    "living": "L IH1 V IH0 NG",
    "local": "L OW1 K AH0 L",
    "lonely": "L OW1 N L IY0",
    "long": "L AO1 NG",
    "look": "L UH1 K",
    "looking": "L UH1 K IH0 NG",
    "lose": "L UW1 Z",
    "losing": "L UW1 Z IH0 NG",
    "lost": "L AO1 S T",
    "loud": "L AW1 D",
    "love": "L AH1 V",
    "loved": "L AH1 V D",
    "loves": "L AH1 V Z",
    "loving": "L AH1 V IH0 NG",
    "low": "L OW1",
    "made": "M EY1 D",
    "main": "M EY1 N",
    "make": "M EY1 K",
    "makes": "M EY1 K S",
    "making": "M EY1 K IH0 NG",
    "man": "M AE1 N",
    "mat": "M AE1 T",
    "maybe": "M EY1 B IY0",
    "me": "M IY1",
    "meet": "M IY1 T",
    "melody": "M EH1 L AH0 D IY0",
    "memories": "M EH1 M ER0 IY0 Z",
    "memory": "M EH1 M ER0 IY0",
    "midnight": "M IH1 D N AY2 T",
    "might": "M AY1 T",
    "mile": "M AY1 L",
    "miles": "M AY1 L Z",
    "mind": "M AY1 N D",
    "mine": "M AY1 N",
    "mobile": "M OW1 B AH0 L",
    "money": "M AH1 N IY0",
    "moon": "M UW1 N",
    "moonlight": "M UW1 N L AY2 T",
    "more": "M AO1 R",
    "morning": "M AO1 R N IH0 NG",
    "most": "M OW1 S T",
    "mountain": "M AW1 N T AH0 N",
    "moving": "M UW1 V IH0 NG",
    "music": "M Y UW1 Z IH0 K",
    "my": "M AY1",
    "na": "N AA1",
    "name": "N EY1 M",
    "need": "N IY1 D",
    "needs": "N IY1 D Z",
    "never": "N EH1 V ER0",
    "new": "N UW1",
    "night": "N AY1 T",
    "nights": "N AY1 T S",
    "no": "N OW1",
    "nobody": "N OW1 B AH0 D IY0",
    "not": "N AA1 T",
    "nothing": "N AH1 TH IH0 NG",
    "now": "N AW1",
    "ocean": "OW1 SH AH0 N",
    "of": "AH1 V",
    "oh": "OW1",
    "okay": "OW2 K EY1",
    "old": "OW1 L D",
    "on": "AA1 N",
    "once": "W AH1 N S",
    "one": "W AH1 N",
    "only": "OW1 N L IY0",
    "ooh": "UW1",
    "open": "OW1 P AH0 N",
    "or": "AO1 R",
    "our": "AW1 ER0",
    "out": "AW1 T",
    "outside": "AW1 T S AY1 D",
    "over": "OW1 V ER0",
    "own": "OW1 N",
    "pain": "P EY1 N",
    "part": "P AA1 R T",
    "people": "P IY1 P AH0 L",
    "phone": "F OW1 N",
    "picture": "P IH1 K CH ER0",
    "play": "P L EY1",
    "playing": "P L EY1 IH0 NG",
    "pray": "P R EY1",
    "pretty": "P R IH1 T IY0",
    "queen": "K W IY1 N",
    "radio": "R EY1 D IY0 OW2",
    "rain": "R EY1 N",
    "real": "R IY1 L",
    "red": "R EH1 D",
    "remain": "R IH0 M EY1 N",
    "remember": "R IH0 M EH1 M B ER0",
    "repeat": "R IH0 P IY1 T",
    "return": "R IH0 T ER1 N",
    "riding": "R AY1 D IH0 NG",
    "right": "R AY1 T",
    "ring": "R IH1 NG",
    "rising": "R AY1 Z IH0 NG",
    "river": "R IH1 V ER0",
    "road": "R OW1 D",
    "roads": "R OW1 D Z",
    "roam": "R OW1 M",
    "roll": "R OW1 L",
    "room": "R UW1 M",
    "ruin": "R UW1 IH0 N",
    "run": "R AH1 N",
    "running": "R AH1 N IH0 NG",
    "sad": "S AE1 D",
    "said": "S EH1 D",
    "same": "S EY1 M",
    "sat": "S AE1 T",
    "saw": "S AO1",
    "say": "S EY1",
    "saying": "S EY1 IH0 NG",
    "says": "S EH1 Z",
    "scar": "S K AA1 R",
    "sea": "S IY1",
    "see": "S IY1",
    "seen": "S IY1 N",
    "sell": "S EH1 L",
    "shadow": "SH AE1 D OW2",
    "shadows": "SH AE1 D OW2 Z",
    "shame": "SH EY1 M",
    "she": "SH IY1",
    "shell": "SH EH1 L",
    "shine": "SH AY1 N",
    "shining": "SH AY1 N IH0 NG",
    "shoe": "SH UW1",
    "show": "SH OW1",
    "shown": "SH OW1 N",
    "sight": "S AY1 T",
    "sign": "S AY1 N",
    "silence": "S AY1 L AH0 N S",
    "silver": "S IH1 L V ER0",
    "sin": "S IH1 N",
    "sing": "S IH1 NG",
    "singing": "S IH1 NG IH0 NG",
    "sings": "S IH1 NG Z",
    "skin": "S K IH1 N",
    "sky": "S K AY1",
    "skyline": "S K AY1 L AY2 N",
    "sleeping": "S L IY1 P IH0 NG",
    "slow": "S L OW1",
    "small": "S M AO1 L",
    "smart": "S M AA1 R T",
    "smile": "S M AY1 L",
    "smiling": "S M AY1 L IH0 NG",
    "so": "S OW1",
    "some": "S AH1 M",
    "somebody": "S AH1 M B AA2 D IY0",
    "someone": "S AH1 M W AH2 N",
    "something": "S AH1 M TH IH0 NG",
    "somewhere": "S AH1 M W EH2 R",
    "song": "S AO1 NG",
    "songs": "S AO1 NG Z",
    "soon": "S UW1 N",
    "soul": "S OW1 L",
    "sound": "S AW1 N D",
    "spell": "S P EH1 L",
    "spend": "S P EH1 N D",
    "spring": "S P R IH1 NG",
    "standing": "S T AE1 N D IH0 NG",
    "star": "S T AA1 R",
    "starlight": "S T AA1 R L AY2 T",
    "stars": "S T AA1 R Z",
    "start": "S T AA1 R T",
    "stay": "S T EY1",
    "stayed": "S T EY1 D",
    "staying": "S T EY1 IH0 NG",
    "still": "S T IH1 L",
    "stone": "S T OW1 N",
    "stories": "S T AO1 R IY0 Z",
    "storm": "S T AO1 R M",
    "story": "S T AO1 R IY0",
    "street": "S T R IY1 T",
    "summer": "S AH1 M ER0",
    "summertime": "S AH1 M ER0 T AY2 M",
    "sun": "S AH1 N",
    "sunlight": "S AH1 N L AY2 T",
    "sunrise": "S AH1 N R AY2 Z",
    "sunset": "S AH1 N S EH2 T",
    "sunshine": "S AH1 N SH AY2 N",
    "sweet": "S W IY1 T",
    "swell": "S W EH1 L",
    "take": "T EY1 K",
    "takes": "T EY1 K S",
    "taking": "T EY1 K IH0 NG",
    "tall": "T AO1 L",
    "tell": "T EH1 L",
    "telling": "T EH1 L IH0 NG",
    "than": "DH AE1 N",
    "that": "DH AE1 T",
    "the": "DH AH0",
    "their": "DH EH1 R",
    "them": "DH EH1 M",
    "then": "DH EH1 N",
    "there": "DH EH1 R",
    "these": "DH IY1 Z",
    "they": "DH EY1",
    "thing": "TH IH1 NG",
    "things": "TH IH1 NG Z",
    "think": "TH IH1 NG K",
    "thinking": "TH IH1 NG K IH0 NG",
    "this": "DH IH1 S",
    "those": "DH OW1 Z",
    "though": "DH OW1",
    "thought": "TH AO1 T",
    "three": "TH R IY1",
    "through": "TH R UW1",
    "thunder": "TH AH1 N D ER0",
    "tight": "T AY1 T",
    "till": "T IH1 L",
    "time": "T AY1 M",
    "times": "T AY1 M Z",
    "to": "T UW1",
    "today": "T AH0 D EY1",
    "together": "T AH0 G EH1 DH ER0",
    "told": "T OW1 L D",
    "tomorrow": "T AH0 M AA1 R OW2",
    "tonight": "T AH0 N AY1 T",
    "too": "T UW1",
    "took": "T UH1 K",
    "touch": "T AH1 CH",
    "town": "T AW1 N",
    "train": "T R EY1 N",
    "true": "T R UW1",
    "trust": "T R AH1 S T",
    "trying": "T R AY1 IH0 NG",
    "turn": "T ER1 N",
    "turned": "T ER1 N D",
    "turning": "T ER1 N IH0 NG",
    "twice": "T W AY1 S",
    "under": "AH1 N D ER0",
    "undone": "AH0 N D AH1 N",
    "until": "AH0 N T IH1 L",
    "up": "AH1 P",
    "upon": "AH0 P AA1 N",
    "us": "AH1 S",
    "using": "Y UW1 Z IH0 NG",
    "valley": "V AE1 L IY0",
    "view": "V Y UW1",
    "voice": "V OY1 S",
    "wait": "W EY1 T",
    "waiting": "W EY1 T IH0 NG",
    "walked": "W AO1 K T",
    "walking": "W AO1 K IH0 NG",
    "wall": "W AO1 L",
    "wander": "W AA1 N D ER0",
    "wanna": "W AA1 N AH0",
    "want": "W AA1 N T",
    "warm": "W AO1 R M",
    "was": "W AA1 Z",
    "watch": "W AA1 CH",
    "watching": "W AA1 CH IH0 NG",
    "way": "W EY1",
    "we": "W IY1",
    "we're": "W IH1 R",
    "well": "W EH1 L",
    "went": "W EH1 N T",
    "were": "W ER1",
    "what": "W AH1 T",
    "when": "W EH1 N",
    "whenever": "W EH0 N EH1 V ER0",
    "where": "W EH1 R",
    "wherever": "W EH0 R EH1 V ER0",
    "whether": "W EH1 DH ER0",
    "while": "W AY1 L",
    "whisper": "W IH1 S P ER0",
    "whispers": "W IH1 S P ER0 Z",
    "white": "W AY1 T",
    "who": "HH UW1",
    "whole": "HH OW1 L",
    "why": "W AY1",
    "wild": "W AY1 L D",
    "will": "W IH1 L",
    "win": "W IH1 N",
    "wind": "W IH1 N D",
    "window": "W IH1 N D OW2",
    "wing": "W IH1 NG",
    "winter": "W IH1 N T ER0",
    "wire": "W AY1 ER0",
    "with": "W IH1 DH",
    "within": "W IH0 DH IH1 N",
    "without": "W IH0 TH AW1 T",
    "woman": "W UH1 M AH0 N",
    "won't": "W OW1 N T",
    "wonder": "W AH1 N D ER0",
    "word": "W ER1 D",
    "words": "W ER1 D Z",
    "world": "W ER1 L D",
    "would": "W UH1 D",
    "yeah": "Y AE1",
    "yearn": "Y ER1 N",
    "yell": "Y EH1 L",
    "yesterday": "Y EH1 S T ER0 D EY2",
    "you": "Y UW1",
    "you're": "Y UH1 R",
    "young": "Y AH1 NG",
    "your": "Y AO1 R",
    "zone": "Z OW1 N",
}


def to_ipa(arpabet: str) -> str:
    """Convert one ARPABET pronunciation string to spaced IPA with stress marks."""
    out = []
    for token in arpabet.split():
        stress = ""
        if token[-1].isdigit():
            stress = STRESS_PREFIX[token[-1]]
            token = token[:-1]
        if token == "AH":
            ipa = "ʌ" if stress else "ə"
        elif token == "ER":
            ipa = "ɝ" if stress else "ɚ"
        else:
            ipa = ARPABET_TO_IPA[token]
        out.append(stress + ipa)
    return " ".join(out)


def main() -> None:
    lines = [
        "# Bundled pronunciation snapshot (General American).",
        "# Source table: tools/build_pron_dict.py (ARPABET, CMU dictionary conventions).",
        "# Format: word<TAB>space-separated IPA phonemes; ˈ/ˌ prefix a stressed nucleus.",
    ]
    for word in sorted(LEXICON):
        lines.append(f"{word}\t{to_ipa(LEXICON[word])}")
    OUT_PATH.parent.mkdir(parents=True, exist_ok=True)
    OUT_PATH.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(LEXICON)} entries to {OUT_PATH}")


if __name__ == "__main__":
    main()
