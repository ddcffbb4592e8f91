#!/usr/bin/env python3
"""Regenerates the bundled vocabulary, prompt corpus and pair fixture.

Writes data/vocab.txt, data/prompts.txt, data/pairs.tsv, data/roundtrip.txt
and the embedded copy in include/swapsuffix/bundled_data.hpp.  Output is
deterministic (fixed seed), so re-running leaves the tree unchanged.
"""

import pathlib
import random
import string

ROOT = pathlib.Path(__file__).resolve().parent.parent

ANIMALS = """
ant ape bat bear beaver bee beetle bird bison boar buffalo bull butterfly
camel cat caterpillar cheetah chicken chimpanzee cobra cow crab crane crocodile
crow deer dinosaur dog dolphin donkey dove dragon dragonfly duck eagle eel
elephant elk falcon ferret finch fish flamingo fox frog gazelle giraffe goat
goldfish goose gorilla grasshopper hamster hare hawk hedgehog hen heron hippo
horse hummingbird hyena iguana jaguar jellyfish kangaroo kitten koala ladybug
lamb leopard lion lizard llama lobster lynx macaw magpie mole monkey moose
mosquito moth mouse mule octopus orca ostrich otter owl ox panda panther
parrot peacock pelican penguin pig pigeon pony poodle porcupine puffin puppy
rabbit raccoon ram rat raven reindeer rhino robin rooster salmon scorpion seal
shark sheep shrimp skunk sloth snail snake sparrow spider squid squirrel
starfish stingray stork swan tiger toad tortoise toucan trout turkey turtle
unicorn vulture walrus wasp weasel whale wolf wombat woodpecker worm yak zebra
"""

PEOPLE = """
man woman boy girl child baby human person people robot astronaut knight
wizard witch pirate ninja samurai soldier king queen prince princess chef
doctor nurse farmer fisherman firefighter policeman sailor student teacher
scientist artist painter musician dancer singer guitarist drummer athlete
skier surfer skateboarder cyclist runner swimmer climber hiker tourist
cowboy clown monk nun priest viking alien ghost zombie vampire mermaid
fairy angel giant dwarf elf troll goblin cyborg android mannequin statue
grandmother grandfather mother father sister brother family couple crowd
"""

OBJECTS = """
apple backpack bag ball balloon banana basket bed bell bench bicycle bike
birdhouse blanket boat book bottle bowl box bread bridge broom bucket bulb
cabin cake camera candle canoe car carpet cart castle chair chandelier
chess clock coat computer couch cup curtain desk doll door drum egg fan
flag flower fork fountain guitar hammer hat helicopter helmet jacket
kettle key kite ladder lamp lantern laptop lighthouse lock mailbox map
mirror motorcycle mug mushroom necklace notebook oven paintbrush pan
parachute pencil phone piano pillow pizza plane plate pot pumpkin purse
radio ring rocket rope rug sandwich saxophone scarf scissors shield shoe
shovel sign skateboard sled sofa spoon submarine suitcase sunflower
sword table teapot telescope television tent tower toy tractor train
tree truck trumpet tub umbrella vase violin wagon wallet watch wheel
windmill window yacht balloon bus taxi van jeep airship zeppelin glider
skyscraper house hut igloo temple church pyramid barn cottage palace
chateau fort tent treehouse scarecrow snowman sculpture fence gate wall
"""

FOOD = """
burger cheese cookie donut grapes hotdog icecream lemon lettuce mango
melon noodles orange pancake pasta peach pear pie pineapple popcorn
potato salad soup steak strawberry sushi taco tomato watermelon carrot
corn onion pepper cherry coconut croissant muffin cupcake chocolate coffee
tea milk juice wine beer soda honey
"""

PLACES = """
lake river ocean sea beach shore island forest jungle desert mountain
hill valley canyon cave field meadow garden park farm village city town
street road alley highway bridge harbor port market mall shop store
restaurant cafe kitchen bedroom bathroom library classroom school
museum gallery theater stadium arena gym office factory warehouse
hospital station airport subway tunnel rooftop balcony porch attic
basement yard backyard playground swamp marsh glacier volcano waterfall
pond stream aquarium zoo circus castle space moon planet sky cloud
clouds rain snow storm fog sunset sunrise night dawn dusk winter summer
autumn spring blackboard table shelf branch window street ice wall
"""

ADJECTIVES = """
red blue green yellow orange purple pink brown black white gray grey gold
golden silver colorful bright dark shiny dull big small tiny huge giant
large little tall short long wide narrow thick thin fat skinny old young
ancient modern new vintage rusty wooden metal glass plastic stone paper
soft hard smooth rough wet dry hot cold warm cool frozen icy snowy sunny
rainy cloudy foggy windy stormy quiet loud calm wild happy sad angry
scared sleepy hungry curious friendly fierce cute ugly beautiful pretty
handsome elegant fancy simple strange weird magical mysterious spooky
scary funny silly serious busy empty crowded clean dirty messy neat
broken abandoned haunted enchanted floating flying glowing burning
melting sparkling realistic cartoon detailed blurry sharp minimalist
abstract surreal futuristic medieval tropical arctic urban rural
cozy fluffy furry feathered striped spotted hairy bald wrinkled
"""

VERBS = """
swimming dancing running walking jumping flying sitting standing sleeping
eating drinking reading writing painting singing playing riding driving
climbing crawling floating falling hiding looking watching waiting
laughing smiling crying shouting talking cooking baking fishing hunting
surfing skiing skating skateboarding cycling hiking camping sailing
rowing diving digging building fighting chasing carrying holding pulling
pushing throwing catching kicking hugging kissing waving pointing
grazing roaring barking howling singing glowing burning melting resting
lying leaning perched guarding wearing juggling balancing stretching
exploring wandering marching racing soaring gliding drifting splashing
"""

FUNCTION = """
a an the in on at of with and or but to from into onto over under above
below behind beside between near by through across around along against
toward towards during after before while is are was were be being been
has have had this that these those there here it its his her their our
my your one two three four five six seven eight nine ten many some few
several all both each every no not very too so up down out off next
inside outside top bottom front back side middle edge corner center
photo picture painting drawing sketch doodle illustration image portrait
scene view close closeup wide shot style render digital oil watercolor
pencil ink anime photograph photography light shadow reflection air hot
jack o lantern bulb tree branch shopping
"""


def words(block):
    return block.split()


def plural(w):
    if w.endswith(("s", "x", "sh", "ch")):
        return w + "es"
    if w.endswith("y") and w[-2] not in "aeiou":
        return w[:-1] + "ies"
    return w + "s"


def build_vocab():
    from sklearn.feature_extraction.text import ENGLISH_STOP_WORDS

    specials = ["<pad>", "<bos>", "<eos>", "<unk>"]
    ascii_chars = [c for c in string.printable if c.isprintable() and not c.isspace()]
    pool = []
    for block in (ANIMALS, PEOPLE, OBJECTS, FOOD, PLACES, ADJECTIVES, VERBS, FUNCTION):
        pool.extend(words(block))
    pool.extend(sorted(ENGLISH_STOP_WORDS))
    # plural nouns widen coverage of realistic prompts
    for block in (ANIMALS, PEOPLE, OBJECTS, FOOD):
        pool.extend(plural(w) for w in words(block))
    seen = set(specials) | set(ascii_chars)
    out = list(specials) + ascii_chars
    for w in pool:
        w = w.lower()
        if w not in seen:
            seen.add(w)
            out.append(w)
    return out


PROMPT_TEMPLATES = [
    "a {adj} {noun} {verb} in the {place}",
    "a {noun} {verb} in a {place}",
    "a photo of a {noun} {verb} near the {place}",
    "an oil painting of a {adj} {noun} in a {place}",
    "a {noun} on a {place} at sunset",
    "the {adj} {noun} is {verb} by the {place}",
    "two {nouns} {verb} in the {place}",
    "a doodle of a {noun} on a blackboard",
    "a {adj} {noun} and a {noun2} in the {place}",
    "a close up photo of a {adj} {noun}",
]


def build_prompts(rng):
    subjects = words(ANIMALS) + words(PEOPLE) + words(OBJECTS)[:80]
    adjs = words(ADJECTIVES)
    verbs = words(VERBS)
    places = words(PLACES)
    prompts = set()
    while len(prompts) < 500:
        tmpl = rng.choice(PROMPT_TEMPLATES)
        noun = rng.choice(subjects)
        noun2 = rng.choice(subjects)
        text = tmpl.format(
            adj=rng.choice(adjs), noun=noun, noun2=noun2, nouns=plural(noun),
            verb=rng.choice(verbs), place=rng.choice(places),
        )
        toks = text.split()
        for i in range(len(toks) - 1):
            if toks[i] == "a" and toks[i + 1][0] in "aeiou":
                toks[i] = "an"
        prompts.add(" ".join(toks))
    return sorted(prompts)


# Entity swaps in the style of the published asymmetric examples.
PAIRS = [
    ("swan_horse", "a swan swimming in a lake", "swan", "horse"),
    ("human_robot", "a human dancing in the rain", "human", "robot"),
    ("plane_balloon", "a plane in the sky at sunset", "plane", "balloon"),
    ("cabin_backpack", "a cabin on a mountain", "cabin", "backpack"),
    ("forest_mall", "an owl in a forest", "forest", "mall"),
    ("birdhouse_lantern", "a birdhouse on a tree branch", "birdhouse", "lantern"),
    ("turtle_fish", "a turtle swimming in an aquarium", "turtle", "fish"),
    ("bulb_dog", "a doodle of a bulb on a blackboard", "bulb", "dog"),
    ("tent_statue", "a tent in a forest", "tent", "statue"),
    ("castle_backpack", "a castle on a mountain", "castle", "backpack"),
    ("cat_dog", "a cat sleeping on a sofa", "cat", "dog"),
    ("car_bicycle", "a red car in the street", "car", "bicycle"),
    ("lion_tiger", "a lion resting in the desert", "lion", "tiger"),
    ("boat_whale", "a boat floating on the ocean", "boat", "whale"),
    ("chef_robot", "a chef cooking in a kitchen", "chef", "robot"),
    ("apple_orange", "an apple on a wooden table", "apple", "orange"),
    ("astronaut_horse", "an astronaut riding on the moon", "astronaut", "horse"),
    ("penguin_duck", "a penguin standing on the ice", "penguin", "duck"),
    ("guitar_violin", "a guitar leaning against a wall", "guitar", "violin"),
    ("dragon_knight", "a dragon guarding a castle", "dragon", "knight"),
]


def build_pairs(vocab):
    vs = set(vocab)
    rows = []
    for pid, src, es, et in PAIRS:
        tgt = src.replace(es, et, 1)
        for w in (src + " " + tgt).split():
            assert w in vs, (pid, w)
        rows.append((pid, src, tgt, es, et))
    return rows


def cpp_raw(name, text):
    # raw string literals are chunked to stay under common compiler limits
    chunks = []
    lines = text.splitlines(keepends=True)
    buf = ""
    for line in lines:
        if len(buf) + len(line) > 8000:
            chunks.append(buf)
            buf = ""
        buf += line
    if buf:
        chunks.append(buf)
    body = "\n".join(f'    R"swapsuffix({c})swapsuffix"' for c in chunks)
    return f"inline constexpr std::string_view {name} =\n{body};\n"


def main():
    rng = random.Random(20240611)
    vocab = build_vocab()
    prompts = build_prompts(rng)
    vs = set(vocab)
    for p in prompts:
        for w in p.split():
            assert w in vs, (p, w)
    pairs = build_pairs(vocab)
    content_words = [w for w in vocab[4:] if len(w) > 1]
    roundtrip = [rng.choice(content_words) for _ in range(200)]

    data = ROOT / "data"
    data.mkdir(exist_ok=True)
    vocab_txt = "\n".join(vocab) + "\n"
    prompts_txt = "\n".join(prompts) + "\n"
    pairs_txt = "pair_id\tsource_text\ttarget_text\tentity_source\tentity_target\n"
    pairs_txt += "".join("\t".join(r) + "\n" for r in pairs)
    roundtrip_txt = " ".join(roundtrip) + "\n"
    (data / "vocab.txt").write_text(vocab_txt)
    (data / "prompts.txt").write_text(prompts_txt)
    (data / "pairs.tsv").write_text(pairs_txt)
    (data / "roundtrip.txt").write_text(roundtrip_txt)

    header = [
        "// Generated by tools/gen_data.py from data/. Do not edit.",
        "#pragma once",
        "",
        "#include <string_view>",
        "",
        "namespace swapsuffix::bundled {",
        "",
        cpp_raw("kVocabulary", vocab_txt),
        cpp_raw("kPromptCorpus", prompts_txt),
        cpp_raw("kPairs", pairs_txt),
        cpp_raw("kRoundTripText", roundtrip_txt),
        "}  // namespace swapsuffix::bundled",
        "",
    ]
    out = ROOT / "include" / "swapsuffix" / "bundled_data.hpp"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(header))
    print(f"vocab={len(vocab)} prompts={len(prompts)} pairs={len(pairs)}")


if __name__ == "__main__":
    main()
