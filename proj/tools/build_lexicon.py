#!/usr/bin/env python3
# Copyright 2026 The Sentest Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/thesaurus.json and data/pos_lexicon.json.

Each line below is a synonym group; every member lists the other members
as its synonyms. Words appearing in several groups get the union.
Output is sorted so the files are stable under regeneration.
"""

import json
import pathlib
import sys

ADJ = """
good fine nice decent pleasant agreeable
bad poor awful terrible dreadful lousy
great excellent superb outstanding splendid magnificent
big large huge enormous vast massive
small little tiny minute petite compact
happy glad cheerful joyful merry content
sad unhappy sorrowful gloomy miserable melancholy
angry furious irate mad livid enraged
afraid scared frightened fearful terrified
brave courageous bold fearless daring valiant
fast quick rapid swift speedy brisk
slow sluggish leisurely unhurried gradual
smart clever intelligent bright brilliant sharp
stupid dumb foolish dim dense
beautiful pretty lovely gorgeous attractive handsome
ugly hideous unsightly homely plain
old ancient aged elderly antique vintage
new fresh novel modern recent contemporary
young youthful juvenile immature
rich wealthy affluent prosperous
poor needy impoverished destitute penniless
hard difficult tough arduous demanding challenging
easy simple effortless straightforward painless
strong powerful mighty sturdy robust
weak feeble frail fragile flimsy
hot warm heated scorching torrid
cold chilly cool frigid icy freezing
wet damp moist soggy soaked
dry arid parched dehydrated
clean spotless tidy neat immaculate
dirty filthy grimy muddy soiled
quiet silent calm peaceful tranquil serene
loud noisy deafening thunderous boisterous
important significant crucial vital essential key
strange odd weird peculiar bizarre unusual
normal ordinary usual typical regular standard
funny amusing hilarious comical humorous
serious solemn grave earnest somber
kind gentle caring compassionate considerate thoughtful
cruel mean nasty vicious brutal heartless
honest truthful sincere frank candid genuine
dishonest deceitful lying sneaky crooked
famous renowned celebrated noted prominent illustrious
unknown obscure anonymous unfamiliar
busy occupied engaged swamped
lazy idle sluggardly indolent slothful
tired weary exhausted drained fatigued sleepy
sick ill unwell ailing poorly
healthy fit well hale hearty
wrong incorrect mistaken erroneous false inaccurate
right correct accurate exact precise true
empty vacant hollow bare void
full packed crowded stuffed jammed
dangerous risky hazardous perilous unsafe
safe secure protected sheltered harmless
expensive costly pricey dear extravagant
cheap inexpensive affordable economical thrifty
interesting fascinating intriguing engaging absorbing compelling
boring dull tedious monotonous bland dreary
wonderful marvelous fabulous fantastic terrific amazing
horrible horrid appalling atrocious abysmal ghastly
delicious tasty yummy scrumptious delectable savory
complete whole entire total full
certain sure positive convinced confident
possible feasible viable achievable plausible
impossible unattainable unachievable hopeless
obvious clear evident apparent plain manifest
hidden concealed secret covert veiled
huge gigantic colossal immense tremendous mammoth
famous wellknown
generous charitable giving liberal lavish
selfish greedy stingy miserly
polite courteous civil respectful gracious mannerly
rude impolite discourteous insolent disrespectful
proud dignified arrogant haughty
humble modest meek unassuming
friendly amiable cordial sociable genial affable
hostile unfriendly antagonistic aggressive belligerent
eager keen enthusiastic avid zealous
nervous anxious uneasy tense jittery edgy
calm relaxed composed collected placid
wild untamed savage feral fierce
gentle mild soft tender delicate
rough coarse rugged harsh bumpy
smooth sleek silky glossy polished
sharp keen pointed acute
bright shiny brilliant radiant vivid luminous
dark dim murky shadowy gloomy
heavy weighty hefty bulky ponderous
light lightweight airy weightless
thin slim slender lean skinny slight
fat plump chubby stout overweight portly
tall high lofty towering
short brief concise succinct
long lengthy extended prolonged protracted endless
wide broad expansive spacious roomy
narrow tight cramped confined restricted
deep profound bottomless
shallow superficial cursory
simple basic elementary fundamental rudimentary
complex complicated intricate elaborate involved
main chief principal primary major leading
minor trivial petty unimportant insignificant negligible
rare scarce uncommon infrequent sparse
common frequent widespread prevalent
special particular specific distinct unique
general broad universal overall
public open communal shared
private personal confidential intimate
free unrestricted complimentary gratis
real actual genuine authentic true
fake false counterfeit bogus phony sham
ready prepared set primed
early premature initial
late tardy overdue delayed belated
final last ultimate concluding closing terminal
sudden abrupt unexpected swift hasty
steady stable constant consistent unwavering
fair just impartial equitable unbiased
unfair unjust biased partial
lucky fortunate blessed favored
unlucky unfortunate hapless luckless
useful helpful handy practical valuable beneficial
useless worthless futile pointless vain
rapid hasty hurried
curious inquisitive nosy prying
lonely lonesome isolated solitary alone
famous legendary iconic
terrible horrific horrendous
wise sage sensible prudent judicious sagacious
silly goofy childish absurd ridiculous ludicrous
crazy insane mad deranged unhinged
strict stern severe rigid harsh
loose slack baggy relaxed
fresh crisp
stale musty moldy
modern current uptodate
various diverse assorted varied mixed
similar alike comparable akin analogous
different distinct dissimilar diverse unlike
entire intact undivided
okay acceptable adequate satisfactory passable
awesome incredible stunning breathtaking
awkward clumsy ungainly gawky
graceful elegant refined stylish
tiny miniature minuscule microscopic
sleepy drowsy dozy
hungry starving famished ravenous
thirsty parched
famous glorious
gloomy dismal bleak grim
pleasant enjoyable delightful charming
grateful thankful appreciative
worried concerned troubled bothered
confused puzzled baffled bewildered perplexed
excited thrilled elated ecstatic exhilarated
bored uninterested indifferent apathetic
violent ferocious rough
peaceful harmonious
correct proper appropriate suitable fitting apt
exact literal faithful
quick nimble agile
global worldwide international
local regional neighborhood
urban metropolitan civic
rural rustic pastoral provincial
ancient primeval prehistoric archaic
extra additional supplementary further spare
fresh new
enormous giant jumbo
glad pleased delighted
"""

ADV = """
very extremely really highly truly incredibly
quickly rapidly swiftly speedily fast hastily
slowly gradually leisurely sluggishly unhurriedly
quietly silently softly noiselessly
loudly noisily aloud
happily cheerfully joyfully gladly merrily
sadly sorrowfully unhappily gloomily
often frequently regularly repeatedly commonly
rarely seldom infrequently scarcely
always forever constantly perpetually invariably
usually normally generally typically ordinarily
suddenly abruptly unexpectedly
finally eventually ultimately lastly
carefully cautiously attentively meticulously
carelessly recklessly negligently thoughtlessly
easily effortlessly readily smoothly
badly poorly terribly awfully
well nicely properly fine
almost nearly practically virtually roughly approximately
completely totally entirely fully wholly utterly
partly partially somewhat slightly
perhaps maybe possibly perchance
certainly surely definitely undoubtedly absolutely
clearly obviously evidently plainly apparently
honestly frankly candidly sincerely truthfully
quite rather fairly pretty reasonably
probably likely presumably
immediately instantly promptly directly
seriously gravely earnestly solemnly
angrily furiously irately crossly
bravely boldly courageously fearlessly
kindly gently tenderly warmly
rudely impolitely insolently
politely courteously respectfully
especially particularly notably specially
mainly mostly chiefly primarily largely principally
together jointly collectively mutually
alone solo independently singly
soon shortly presently
recently lately newly
previously formerly earlier before
currently presently now
strongly powerfully forcefully vigorously
weakly feebly faintly
actually really genuinely indeed
simply merely just only
exactly precisely accurately correctly
deeply profoundly intensely
highly greatly hugely
badly severely seriously
openly publicly overtly
secretly covertly privately stealthily
eagerly keenly enthusiastically avidly
nervously anxiously uneasily tensely
calmly serenely peacefully placidly
wisely sensibly prudently judiciously
foolishly stupidly unwisely
barely hardly scarcely
nearly closely
quite totally
"""

NOUN = """
car automobile vehicle auto
house home dwelling residence
film movie picture flick
child kid youngster
job work occupation employment
"""

VERB = """
buy purchase acquire
begin start commence
end finish conclude complete
help assist aid
"""


def groups(block):
    for line in block.strip().splitlines():
        words = line.split()
        if len(words) >= 2:
            yield words


def main(out_dir):
    thesaurus = {}
    pos = {}
    for tag, block in (("ADJ", ADJ), ("ADV", ADV), ("NOUN", NOUN),
                       ("VERB", VERB)):
        for group in groups(block):
            for w in group:
                syns = thesaurus.setdefault(w, [])
                for s in group:
                    if s != w and s not in syns:
                        syns.append(s)
                pos.setdefault(w, set()).add(tag)
    # A few function words are tagged so the lexicon is not ADJ/ADV only.
    for w in ("the", "a", "an", "of", "to", "in", "and", "is", "was"):
        pos.setdefault(w, set()).add("OTHER")
    thesaurus = {w: sorted(s) for w, s in sorted(thesaurus.items())}
    pos = {w: sorted(t) for w, t in sorted(pos.items())}
    out = pathlib.Path(out_dir)
    (out / "thesaurus.json").write_text(json.dumps(thesaurus, indent=1) + "\n")
    (out / "pos_lexicon.json").write_text(json.dumps(pos, indent=1) + "\n")
    print(f"{len(thesaurus)} thesaurus entries, {len(pos)} pos entries")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else
         pathlib.Path(__file__).resolve().parent.parent / "data")
