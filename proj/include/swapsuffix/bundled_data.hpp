// Generated by tools/gen_data.py from data/. Do not edit.
#pragma once

#include <string_view>

namespace swapsuffix::bundled {

inline constexpr std::string_view kVocabulary =
    R"swapsuffix(<pad>
<bos>
<eos>
<unk>
0
1
2
3
4
5
6
7
8
9
a
b
c
d
e
f
g
h
i
j
k
l
m
n
o
p
q
r
s
t
u
v
w
x
y
z
A
B
C
D
E
F
G
H
I
J
K
L
M
N
O
P
Q
R
S
T
U
V
W
X
Y
Z
!
"
#
$
%
&
'
(
)
*
+
,
-
.
/
:
;
<
=
>
?
@
[
\
]
^
_
`
{
|
}
~
ant
ape
bat
bear
beaver
bee
beetle
bird
bison
boar
buffalo
bull
butterfly
camel
cat
caterpillar
cheetah
chicken
chimpanzee
cobra
cow
crab
crane
crocodile
crow
deer
dinosaur
dog
dolphin
donkey
dove
dragon
dragonfly
duck
eagle
eel
elephant
elk
falcon
ferret
finch
fish
flamingo
fox
frog
gazelle
giraffe
goat
goldfish
goose
gorilla
grasshopper
hamster
hare
hawk
hedgehog
hen
heron
hippo
horse
hummingbird
hyena
iguana
jaguar
jellyfish
kangaroo
kitten
koala
ladybug
lamb
leopard
lion
lizard
llama
lobster
lynx
macaw
magpie
mole
monkey
moose
mosquito
moth
mouse
mule
octopus
orca
ostrich
otter
owl
ox
panda
panther
parrot
peacock
pelican
penguin
pig
pigeon
pony
poodle
porcupine
puffin
puppy
rabbit
raccoon
ram
rat
raven
reindeer
rhino
robin
rooster
salmon
scorpion
seal
shark
sheep
shrimp
skunk
sloth
snail
snake
sparrow
spider
squid
squirrel
starfish
stingray
stork
swan
tiger
toad
tortoise
toucan
trout
turkey
turtle
unicorn
vulture
walrus
wasp
weasel
whale
wolf
wombat
woodpecker
worm
yak
zebra
man
woman
boy
girl
child
baby
human
person
people
robot
astronaut
knight
wizard
witch
pirate
ninja
samurai
soldier
king
queen
prince
princess
chef
doctor
nurse
farmer
fisherman
firefighter
policeman
sailor
student
teacher
scientist
artist
painter
musician
dancer
singer
guitarist
drummer
athlete
skier
surfer
skateboarder
cyclist
runner
swimmer
climber
hiker
tourist
cowboy
clown
monk
nun
priest
viking
alien
ghost
zombie
vampire
mermaid
fairy
angel
giant
dwarf
elf
troll
goblin
cyborg
android
mannequin
statue
grandmother
grandfather
mother
father
sister
brother
family
couple
crowd
apple
backpack
bag
ball
balloon
banana
basket
bed
bell
bench
bicycle
bike
birdhouse
blanket
boat
book
bottle
bowl
box
bread
bridge
broom
bucket
bulb
cabin
cake
camera
candle
canoe
car
carpet
cart
castle
chair
chandelier
chess
clock
coat
computer
couch
cup
curtain
desk
doll
door
drum
egg
fan
flag
flower
fork
fountain
guitar
hammer
hat
helicopter
helmet
jacket
kettle
key
kite
ladder
lamp
lantern
laptop
lighthouse
lock
mailbox
map
mirror
motorcycle
mug
mushroom
necklace
notebook
oven
paintbrush
pan
parachute
pencil
phone
piano
pillow
pizza
plane
plate
pot
pumpkin
purse
radio
ring
rocket
rope
rug
sandwich
saxophone
scarf
scissors
shield
shoe
shovel
sign
skateboard
sled
sofa
spoon
submarine
suitcase
sunflower
sword
table
teapot
telescope
television
tent
tower
toy
tractor
train
tree
truck
trumpet
tub
umbrella
vase
violin
wagon
wallet
watch
wheel
windmill
window
yacht
bus
taxi
van
jeep
airship
zeppelin
glider
skyscraper
house
hut
igloo
temple
church
pyramid
barn
cottage
palace
chateau
fort
treehouse
scarecrow
snowman
sculpture
fence
gate
wall
burger
cheese
cookie
donut
grapes
hotdog
icecream
lemon
lettuce
mango
melon
noodles
orange
pancake
pasta
peach
pear
pie
pineapple
popcorn
potato
salad
soup
steak
strawberry
sushi
taco
tomato
watermelon
carrot
corn
onion
pepper
cherry
coconut
croissant
muffin
cupcake
chocolate
coffee
tea
milk
juice
wine
beer
soda
honey
lake
river
ocean
sea
beach
shore
island
forest
jungle
desert
mountain
hill
valley
canyon
cave
field
meadow
garden
park
farm
village
city
town
street
road
alley
highway
harbor
port
market
mall
shop
store
restaurant
cafe
kitchen
bedroom
bathroom
library
classroom
school
museum
gallery
theater
stadium
arena
gym
office
factory
warehouse
hospital
station
airport
subway
tunnel
rooftop
balcony
porch
attic
basement
yard
backyard
playground
swamp
marsh
glacier
volcano
waterfall
pond
stream
aquarium
zoo
circus
space
moon
planet
sky
cloud
clouds
rain
snow
storm
fog
sunset
sunrise
night
dawn
dusk
winter
summer
autumn
spring
blackboard
shelf
branch
ice
red
blue
green
yellow
purple
pink
brown
black
white
gray
grey
gold
golden
silver
colorful
bright
dark
shiny
dull
big
small
tiny
huge
large
little
tall
short
long
wide
narrow
thick
thin
fat
skinny
old
young
ancient
modern
new
vintage
rusty
wooden
metal
glass
plastic
stone
paper
soft
hard
smooth
rough
wet
dry
hot
cold
warm
cool
frozen
icy
snowy
sunny
rainy
cloudy
foggy
windy
stormy
quiet
loud
calm
wild
happy
sad
angry
scared
sleepy
hungry
curious
friendly
fierce
cute
ugly
beautiful
pretty
handsome
elegant
fancy
simple
strange
weird
magical
mysterious
spooky
scary
funny
silly
serious
busy
empty
crowded
clean
dirty
messy
neat
broken
abandoned
haunted
enchanted
floating
flying
glowing
burning
melting
sparkling
realistic
cartoon
detailed
blurry
sharp
minimalist
abstract
surreal
futuristic
medieval
tropical
arctic
urban
rural
cozy
fluffy
furry
feathered
striped
spotted
hairy
bald
wrinkled
swimming
dancing
running
walking
jumping
sitting
standing
sleeping
eating
drinking
reading
writing
painting
singing
playing
riding
driving
climbing
crawling
falling
hiding
looking
watching
waiting
laughing
smiling
crying
shouting
talking
cooking
baking
fishing
hunting
surfing
skiing
skating
skateboarding
cycling
hiking
camping
sailing
rowing
diving
digging
building
fighting
chasing
carrying
holding
pulling
pushing
throwing
catching
kicking
hugging
kissing
waving
pointing
grazing
roaring
barking
howling
resting
lying
leaning
perched
guarding
wearing
juggling
balancing
stretching
exploring
wandering
marching
racing
soaring
gliding
drifting
splashing
an
the
in
on
at
of
with
and
or
but
to
from
into
onto
over
under
above
below
behind
beside
between
near
by
through
across
around
along
against
toward
towards
during
after
before
while
is
are
was
were
be
being
been
has
have
had
this
that
these
those
there
here
it
its
his
her
their
our
my
your
one
two
three
four
five
six
seven
eight
nine
ten
many
some
few
several
all
both
each
every
no
not
very
too
so
up
down
out
off
next
inside
outside
top
bottom
front
back
side
middle
edge
corner
center
photo
picture
drawing
sketch
doodle
illustration
image
portrait
scene
view
close
closeup
shot
style
render
digital
oil
watercolor
ink
anime
photograph
photography
light
shadow
reflection
air
jack
shopping
about
afterwards
again
almost
alone
already
also
although
always
am
among
amongst
amoungst
amount
another
any
anyhow
anyone
anything
anyway
anywhere
as
became
because
become
becomes
becoming
beforehand
besides
beyond
bill
call
can
cannot
cant
co
con
could
couldnt
cry
de
describe
detail
do
done
due
eg
either
eleven
else
elsewhere
enough
etc
even
ever
everyone
everything
everywhere
except
fifteen
fifty
fill
find
fire
first
for
former
formerly
forty
found
full
further
get
give
go
hasnt
he
hence
hereafter
hereby
herein
hereupon
hers
herself
him
himself
how
however
hundred
ie
if
inc
indeed
interest
itself
keep
last
latter
latterly
least
less
ltd
made
may
me
meanwhile
might
mill
mine
more
moreover
most
mostly
move
much
must
myself
name
namely
neither
never
nevertheless
nobody
none
noone
nor
nothing
now
nowhere
often
once
only
other
others
otherwise
ours
ourselves
own
part
per
perhaps
please
put
rather
re
same
see
seem
seemed
seeming
seems
she
should
show
since
sincere
sixty
somehow
someone
something
sometime
sometimes
somewhere
still
such
system
take
than
them
themselves
then
thence
thereafter
thereby
therefore
therein
thereupon
they
third
though
throughout
thru
thus
together
twelve
twenty
un
until
upon
us
via
we
well
what
whatever
when
whence
whenever
where
whereafter
whereas
whereby
wherein
whereupon
wherever
whether
which
whither
who
whoever
whole
whom
whose
why
will
within
without
would
yet
you
yours
yourself
yourselves
ants
apes
bats
bears
beavers
bees
beetles
birds
bisons
boars
buffalos
bulls
butterflies
camels
cats
caterpillars
cheetahs
chickens
chimpanzees
cobras
cows
crabs
cranes
crocodiles
crows
deers
dinosaurs
dogs
dolphins
donkeys
doves
dragons
dragonflies
ducks
eagles
eels
elephants
elks
falcons
ferrets
finches
fishes
flamingos
foxes
frogs
gazelles
giraffes
goats
goldfishes
gooses
gorillas
grasshoppers
hamsters
hares
hawks
hedgehogs
hens
herons
hippos
horses
hummingbirds
hyenas
iguanas
jaguars
)swapsuffix"
    R"swapsuffix(jellyfishes
kangaroos
kittens
koalas
ladybugs
lambs
leopards
lions
lizards
llamas
lobsters
lynxes
macaws
magpies
moles
monkeys
mooses
mosquitos
moths
mouses
mules
octopuses
orcas
ostriches
otters
owls
oxes
pandas
panthers
parrots
peacocks
pelicans
penguins
pigs
pigeons
ponies
poodles
porcupines
puffins
puppies
rabbits
raccoons
rams
rats
ravens
reindeers
rhinos
robins
roosters
salmons
scorpions
seals
sharks
sheeps
shrimps
skunks
sloths
snails
snakes
sparrows
spiders
squids
squirrels
starfishes
stingrays
storks
swans
tigers
toads
tortoises
toucans
trouts
turkeys
turtles
unicorns
vultures
walruses
wasps
weasels
whales
wolfs
wombats
woodpeckers
worms
yaks
zebras
mans
womans
boys
girls
childs
babies
humans
persons
peoples
robots
astronauts
knights
wizards
witches
pirates
ninjas
samurais
soldiers
kings
queens
princes
princesses
chefs
doctors
nurses
farmers
fishermans
firefighters
policemans
sailors
students
teachers
scientists
artists
painters
musicians
dancers
singers
guitarists
drummers
athletes
skiers
surfers
skateboarders
cyclists
runners
swimmers
climbers
hikers
tourists
cowboys
clowns
monks
nuns
priests
vikings
aliens
ghosts
zombies
vampires
mermaids
fairies
angels
giants
dwarfs
elfs
trolls
goblins
cyborgs
androids
mannequins
statues
grandmothers
grandfathers
mothers
fathers
sisters
brothers
families
couples
crowds
apples
backpacks
bags
balls
balloons
bananas
baskets
beds
bells
benches
bicycles
bikes
birdhouses
blankets
boats
books
bottles
bowls
boxes
breads
bridges
brooms
buckets
bulbs
cabins
cakes
cameras
candles
canoes
cars
carpets
carts
castles
chairs
chandeliers
chesses
clocks
coats
computers
couches
cups
curtains
desks
dolls
doors
drums
eggs
fans
flags
flowers
forks
fountains
guitars
hammers
hats
helicopters
helmets
jackets
kettles
keys
kites
ladders
lamps
lanterns
laptops
lighthouses
locks
mailboxes
maps
mirrors
motorcycles
mugs
mushrooms
necklaces
notebooks
ovens
paintbrushes
pans
parachutes
pencils
phones
pianos
pillows
pizzas
planes
plates
pots
pumpkins
purses
radios
rings
rockets
ropes
rugs
sandwiches
saxophones
scarfs
scissorses
shields
shoes
shovels
signs
skateboards
sleds
sofas
spoons
submarines
suitcases
sunflowers
swords
tables
teapots
telescopes
televisions
tents
towers
toys
tractors
trains
trees
trucks
trumpets
tubs
umbrellas
vases
violins
wagons
wallets
watches
wheels
windmills
windows
yachts
buses
taxis
vans
jeeps
airships
zeppelins
gliders
skyscrapers
houses
huts
igloos
temples
churches
pyramids
barns
cottages
palaces
chateaus
forts
treehouses
scarecrows
snowmans
sculptures
fences
gates
walls
burgers
cheeses
cookies
donuts
grapeses
hotdogs
icecreams
lemons
lettuces
mangos
melons
noodleses
oranges
pancakes
pastas
peaches
pears
pies
pineapples
popcorns
potatos
salads
soups
steaks
strawberries
sushis
tacos
tomatos
watermelons
carrots
corns
onions
peppers
cherries
coconuts
croissants
muffins
cupcakes
chocolates
coffees
teas
milks
juices
wines
beers
sodas
honeys
)swapsuffix";

inline constexpr std::string_view kPromptCorpus =
    R"swapsuffix(a bag on an autumn at sunset
a bald clock standing in the gym
a banana on a rain at sunset
a basket on a garden at sunset
a beautiful pig and an angel in the jungle
a beaver on a shore at sunset
a bed on a cloud at sunset
a bee on a space at sunset
a bell on a bathroom at sunset
a bell on a warehouse at sunset
a big guitar climbing in the arena
a boat on an office at sunset
a broom skiing in a forest
a brown brother carrying in the shelf
a brown penguin and a mosquito in the blackboard
a brown tiger baking in the office
a burning bucket crying in the island
a cake surfing in a jungle
a car on a pond at sunset
a car on a sunrise at sunset
a car perched in a harbor
a cartoon ninja camping in the river
a castle fighting in a space
a castle on a factory at sunset
a caterpillar on a shore at sunset
a chair on a spring at sunset
a chef balancing in a station
a chess singing in a sea
a close up photo of a beautiful boar
a close up photo of a beautiful bull
a close up photo of a beautiful candle
a close up photo of a beautiful troll
a close up photo of a broken drum
a close up photo of a clean boar
a close up photo of a dirty ladybug
a close up photo of a dirty zebra
a close up photo of a dull doll
a close up photo of a fierce bed
a close up photo of a foggy computer
a close up photo of a giant soldier
a close up photo of a glowing mule
a close up photo of a hairy raven
a close up photo of a happy firefighter
a close up photo of a huge camera
a close up photo of a huge helmet
a close up photo of a narrow fox
a close up photo of a pink yak
a close up photo of a quiet sailor
a close up photo of a rainy orca
a close up photo of a red hyena
a close up photo of a rusty ant
a close up photo of a serious paintbrush
a close up photo of a sharp jaguar
a close up photo of a shiny panda
a close up photo of a short owl
a close up photo of a silly chef
a close up photo of a silly lamb
a close up photo of a silver nurse
a close up photo of a silver rooster
a close up photo of a snowy lamb
a close up photo of a soft giraffe
a close up photo of a spooky broom
a close up photo of a stone wizard
a close up photo of a stormy wombat
a close up photo of a striped beaver
a close up photo of a striped cat
a close up photo of a striped shrimp
a close up photo of a striped wombat
a close up photo of a surreal knight
a close up photo of a surreal skier
a close up photo of a tall grasshopper
a close up photo of a thin swimmer
a close up photo of a warm ladder
a close up photo of a white necklace
a close up photo of a windy frog
a close up photo of a wrinkled worm
a close up photo of an ancient chef
a close up photo of an arctic lizard
a close up photo of an enchanted flag
a cobra on a tunnel at sunset
a colorful clock and an eagle in the night
a computer skiing in a mountain
a cool cart perched in the swamp
a cool pelican watching in the kitchen
a couch crawling in a castle
a cow skating in a sky
a crane on a dusk at sunset
a crane on a summer at sunset
a crow pointing in a backyard
a curious angel sailing in the cafe
a curious human hunting in the porch
a deer skateboarding in a night
a dolphin climbing in a backyard
a dolphin kissing in an ice
a donkey on a shelf at sunset
a doodle of a basket on a blackboard
a doodle of a bee on a blackboard
a doodle of a bell on a blackboard
a doodle of a bird on a blackboard
a doodle of a bulb on a blackboard
a doodle of a bull on a blackboard
a doodle of a butterfly on a blackboard
a doodle of a camel on a blackboard
a doodle of a camera on a blackboard
a doodle of a candle on a blackboard
a doodle of a carpet on a blackboard
a doodle of a chimpanzee on a blackboard
a doodle of a cobra on a blackboard
a doodle of a curtain on a blackboard
a doodle of a cyborg on a blackboard
a doodle of a desk on a blackboard
a doodle of a falcon on a blackboard
a doodle of a family on a blackboard
a doodle of a flower on a blackboard
a doodle of a fox on a blackboard
a doodle of a frog on a blackboard
a doodle of a hare on a blackboard
a doodle of a helmet on a blackboard
a doodle of a jacket on a blackboard
a doodle of a king on a blackboard
a doodle of a lobster on a blackboard
a doodle of a mermaid on a blackboard
a doodle of a mosquito on a blackboard
a doodle of a moth on a blackboard
a doodle of a musician on a blackboard
a doodle of a painter on a blackboard
a doodle of a parachute on a blackboard
a doodle of a penguin on a blackboard
a doodle of a porcupine on a blackboard
a doodle of a princess on a blackboard
a doodle of a raven on a blackboard
a doodle of a robin on a blackboard
a doodle of a runner on a blackboard
a doodle of a shark on a blackboard
a doodle of a skunk on a blackboard
a doodle of a surfer on a blackboard
a doodle of a viking on a blackboard
a doodle of a weasel on a blackboard
a doodle of a wolf on a blackboard
a doodle of a wombat on a blackboard
a doodle of an alien on a blackboard
a doodle of an angel on a blackboard
a doodle of an apple on a blackboard
a doodle of an orca on a blackboard
a doodle of an ox on a blackboard
a door on a shelf at sunset
a dragonfly on a bedroom at sunset
a family crawling in a waterfall
a family throwing in a basement
a farmer on an alley at sunset
a farmer skiing in a bedroom
a fat hawk hiking in the moon
a fat paintbrush and a chimpanzee in the pond
a fat prince sailing in the bridge
a feathered bulb and a heron in the rain
a firefighter on a backyard at sunset
a fisherman sitting in a yard
a foggy iguana watching in the river
a foggy ram roaring in the restaurant
a frog on a forest at sunset
a frozen shrimp surfing in the canyon
a funny doll and a bison in the alley
a ghost resting in a gallery
a giraffe on a cave at sunset
a glass couple cooking in the zoo
a glass lion pushing in the river
a gold iguana eating in the stadium
a goldfish on a shelf at sunset
a grasshopper on a planet at sunset
a grasshopper sitting in a sky
a green crow guarding in the highway
a green kitten running in the forest
a guitar on a mall at sunset
a hairy zombie kicking in the branch
a happy athlete and a cyborg in the moon
a hard mushroom skating in the spring
a hat on a circus at sunset
a hat on a park at sunset
a helicopter fighting in a winter
a heron on a garden at sunset
a huge rhino soaring in the road
a hummingbird driving in a rain
a hungry dwarf and a beaver in the sky
a kangaroo on a cafe at sunset
a koala on a balcony at sunset
a koala on a circus at sunset
a laptop on a desert at sunset
a lighthouse barking in a road
a lock crawling in a branch
a loud koala crawling in the bedroom
a lynx splashing in a circus
a magical computer and a firefighter in the gallery
a magical grasshopper and a fan in the stadium
a magical laptop perched in the museum
a magical prince wandering in the attic
a magpie fighting in a tunnel
a mannequin floating in a sunset
a mannequin on a branch at sunset
a modern bridge roaring in the park
a modern sister and a guitarist in the shop
a motorcycle camping in a porch
a mysterious squid reading in the branch
a narrow chimpanzee melting in the airport
a neat ninja and a vampire in the table
a new sloth building in the gym
a notebook on a waterfall at sunset
a panther on a library at sunset
a pencil drinking in a sky
a penguin on a field at sunset
a photo of a backpack jumping near the kitchen
a photo of a bag waving near the forest
a photo of a bag wearing near the town
a photo of a basket hugging near the theater
a photo of a bench splashing near the lake
a photo of a bike drinking near the bedroom
a photo of a bridge walking near the garden
a photo of a broom rowing near the marsh
a photo of a butterfly drinking near the marsh
a photo of a cow splashing near the rooftop
a photo of a curtain reading near the city
a photo of a dancer laughing near the restaurant
a photo of a deer fishing near the cloud
a photo of a deer swimming near the school
a photo of a drum drifting near the highway
a photo of a duck driving near the spring
a photo of a fountain lying near the cave
)swapsuffix"
    R"swapsuffix(a photo of a frog hiding near the harbor
a photo of a gazelle painting near the stream
a photo of a girl flying near the harbor
a photo of a gorilla crawling near the kitchen
a photo of a jellyfish chasing near the street
a photo of a ladybug standing near the forest
a photo of a lamb wandering near the classroom
a photo of a laptop painting near the lake
a photo of a magpie skating near the kitchen
a photo of a man driving near the kitchen
a photo of a mirror riding near the rooftop
a photo of a mouse singing near the circus
a photo of a paintbrush gliding near the shop
a photo of a parrot carrying near the airport
a photo of a parrot flying near the clouds
a photo of a pelican carrying near the bathroom
a photo of a pony stretching near the pond
a photo of a puffin roaring near the school
a photo of a puppy hugging near the gallery
a photo of a queen racing near the planet
a photo of a ram howling near the lake
a photo of a shrimp hiking near the spring
a photo of a sparrow chasing near the theater
a photo of a squid building near the shelf
a photo of a squid hiding near the castle
a photo of a surfer jumping near the table
a photo of a wolf carrying near the stadium
a photo of a worm playing near the port
a photo of an angel roaring near the table
a photo of an egg sitting near the night
a pig balancing in a circus
a plastic horse standing in the fog
a policeman roaring in a storm
a porcupine burning in a branch
a pretty surfer burning in the hospital
a priest on a hospital at sunset
a priest on a summer at sunset
a prince on a summer at sunset
a purple astronaut and a walrus in the playground
a purple crab falling in the road
a purple hiker swimming in the highway
a purple paintbrush and a candle in the autumn
a queen singing in a jungle
a rainy bison and a snail in the gym
a raven sleeping in a desert
a realistic girl melting in the table
a red dog shouting in the attic
a red dwarf skiing in the shore
a robin glowing in a rooftop
a runner on a blackboard at sunset
a runner on a pond at sunset
a rural chef and a fish in the storm
a rural hat and a butterfly in the clouds
a samurai on a museum at sunset
a scary ladder surfing in the office
a sharp chicken painting in the shelf
a short mailbox and a bucket in the summer
a silly crocodile and a snail in the castle
a sister on a blackboard at sunset
a skier on a canyon at sunset
a sleepy mug and a guitar in the rooftop
a smooth bread playing in the office
a soft buffalo glowing in the backyard
a squid pulling in an ocean
a squirrel on a gallery at sunset
a stone notebook and a laptop in the farm
a stormy goat and a heron in the branch
a strange bridge and a couple in the field
a sunny bulb dancing in the shore
a sunny porcupine diving in the dusk
a surreal moose resting in the highway
a surreal sailor and an elf in the city
a tall dragon hugging in the street
a thick crow skateboarding in the zoo
a thick fountain driving in the fog
a thick mule kissing in the hospital
a thick witch and a dragonfly in the airport
a thin dancer and an artist in the basement
a tiny father and an elf in the warehouse
a tortoise on a clouds at sunset
a tortoise on a market at sunset
a tortoise on an island at sunset
a toucan on a cloud at sunset
a tropical beetle and a dragon in the playground
a viking looking in a hill
a warm donkey writing in the waterfall
a wasp wearing in a backyard
a wet sister and a jaguar in the bridge
a wet swimmer and a woman in the table
a witch on a shelf at sunset
a wolf on a restaurant at sunset
a wombat on a town at sunset
a wombat perched in a zoo
a wrinkled mirror and a donkey in the marsh
a wrinkled moth and a turkey in the subway
a wrinkled mug and a panda in the jungle
a yak on a glacier at sunset
a young cyborg and a crocodile in the table
an abandoned knight pulling in the ocean
an alien on a school at sunset
an ancient bridge and a hummingbird in the park
an ape on a bridge at sunset
an ape on a glacier at sunset
an astronaut on a subway at sunset
an elegant snail and an eel in the glacier
an empty bench hiding in the fog
an empty falcon floating in the street
an enchanted painter eating in the library
an enchanted peacock and a vulture in the bathroom
an iguana on an island at sunset
an octopus on a beach at sunset
an oil painting of a bald zebra in a hill
an oil painting of a broken moose in a street
an oil painting of a broken statue in a bathroom
an oil painting of a burning alien in a sea
an oil painting of a dirty lobster in a marsh
an oil painting of a feathered chimpanzee in a warehouse
an oil painting of a flying child in a rooftop
an oil painting of a flying notebook in a winter
an oil painting of a frozen bird in a shore
an oil painting of a furry magpie in a bedroom
an oil painting of a glass owl in a storm
an oil painting of a gray falcon in a field
an oil painting of a huge robin in a city
an oil painting of a large rat in an ocean
an oil painting of a loud dove in a snow
an oil painting of a melting coat in a dusk
an oil painting of a melting trout in a clouds
an oil painting of a metal boar in a port
an oil painting of a minimalist couch in a field
an oil painting of a narrow oven in a winter
an oil painting of a neat goblin in a sunset
an oil painting of a plastic athlete in a gallery
an oil painting of a realistic dolphin in a waterfall
an oil painting of a realistic shrimp in an ocean
an oil painting of a sad hedgehog in a park
an oil painting of a scary map in a balcony
an oil painting of a short koala in a cave
an oil painting of a short monk in an attic
an oil painting of a silver bridge in a playground
an oil painting of a simple mannequin in a clouds
an oil painting of a sleepy couch in an ocean
an oil painting of a sleepy lion in a bathroom
an oil painting of a small kite in a museum
an oil painting of a smooth cake in a farm
an oil painting of a smooth crowd in an island
an oil painting of a sparkling bicycle in a mall
an oil painting of a sparkling bike in a bedroom
an oil painting of a sparkling shark in a library
an oil painting of a strange lobster in a sunrise
an oil painting of a sunny candle in a subway
an oil painting of a thick monkey in a volcano
an oil painting of a vintage angel in a bathroom
an oil painting of a weird cyborg in an alley
an oil painting of a wooden bulb in a backyard
an oil painting of a young mosquito in a night
an oil painting of an ancient robin in a night
an oil painting of an ugly castle in a table
an orange flag singing in the blackboard
an orca on a rooftop at sunset
an oven on a stream at sunset
an ox cooking in a school
an ugly cowboy camping in the subway
an urban bread and a falcon in the arena
the abstract ladybug is kicking by the circus
the big goblin is marching by the shore
the big queen is grazing by the store
the blurry pigeon is walking by the mall
the bright bird is soaring by the storm
the burning goldfish is sailing by the wall
the busy alien is climbing by the stadium
the busy pelican is building by the bathroom
the cartoon snail is catching by the volcano
the curious puppy is splashing by the gallery
the cute coat is crawling by the clouds
the dark couple is falling by the space
the dark squid is drifting by the library
the dark wolf is fighting by the museum
the dirty astronaut is falling by the pond
the dry stingray is kissing by the gym
the dull lynx is diving by the moon
the fat hippo is watching by the playground
the feathered doll is glowing by the autumn
the feathered robot is hiking by the night
the floating falcon is catching by the stream
the fluffy bee is driving by the night
the friendly artist is kicking by the clouds
the friendly goat is racing by the valley
the friendly ninja is dancing by the snow
the frozen princess is skateboarding by the moon
the frozen tortoise is playing by the canyon
the funny elephant is throwing by the valley
the futuristic cake is juggling by the balcony
the giant fan is balancing by the cave
the gray squirrel is drifting by the meadow
)swapsuffix"
    R"swapsuffix(the gray witch is pulling by the spring
the grey flamingo is rowing by the airport
the happy wizard is perched by the forest
the hard teacher is riding by the city
the hot stork is driving by the warehouse
the large car is pushing by the mountain
the long hat is roaring by the subway
the melting mermaid is pointing by the mountain
the mysterious angel is cooking by the road
the new castle is pulling by the street
the new rabbit is rowing by the gym
the purple pig is resting by the storm
the realistic panda is splashing by the stadium
the scary dwarf is camping by the bathroom
the serious cobra is surfing by the yard
the serious statue is skating by the ice
the sharp deer is hunting by the spring
the silver squid is wandering by the fog
the sleepy ape is skateboarding by the airport
the smooth couch is exploring by the sky
the snowy bat is burning by the library
the snowy child is talking by the street
the snowy mother is fishing by the garden
the snowy reindeer is singing by the highway
the soft giant is pulling by the subway
the spooky guitar is racing by the port
the stone man is waiting by the ice
the strange raccoon is climbing by the arena
the sunny priest is gliding by the branch
the tiny nurse is flying by the mall
the white people is perched by the warehouse
the wooden seal is writing by the jungle
the young mouse is hugging by the hill
two babies drinking in the night
two bananas pointing in the attic
two beetles drifting in the sunrise
two books rowing in the window
two boys pointing in the meadow
two breads riding in the rain
two brothers sleeping in the bathroom
two cameras kicking in the city
two coats waving in the branch
two doctors burning in the planet
two dolphins glowing in the mountain
two drums sleeping in the jungle
two families jumping in the sunrise
two fishermans cycling in the mountain
two flowers cycling in the swamp
two goldfishes hiding in the night
two guitarists falling in the lake
two jackets wandering in the shop
two jaguars wandering in the mall
two kangaroos walking in the museum
two lamps skateboarding in the ice
two lobsters leaning in the island
two magpies exploring in the jungle
two moles watching in the jungle
two mothers gliding in the forest
two mothers smiling in the bathroom
two moths sailing in the street
two motorcycles talking in the playground
two nuns running in the airport
two ostriches driving in the town
two parrots throwing in the marsh
two peacocks digging in the autumn
two princes howling in the city
two queens looking in the desert
two rams stretching in the lake
two rats pushing in the mall
two rhinos gliding in the stream
two shrimps kissing in the field
two singers sitting in the bridge
two snails guarding in the balcony
two statues skiing in the city
two turtles dancing in the sky
two turtles surfing in the wall
two unicorns pushing in the bedroom
two vampires camping in the dawn
two wombats kissing in the kitchen
)swapsuffix";

inline constexpr std::string_view kPairs =
    R"swapsuffix(pair_id	source_text	target_text	entity_source	entity_target
swan_horse	a swan swimming in a lake	a horse swimming in a lake	swan	horse
human_robot	a human dancing in the rain	a robot dancing in the rain	human	robot
plane_balloon	a plane in the sky at sunset	a balloon in the sky at sunset	plane	balloon
cabin_backpack	a cabin on a mountain	a backpack on a mountain	cabin	backpack
forest_mall	an owl in a forest	an owl in a mall	forest	mall
birdhouse_lantern	a birdhouse on a tree branch	a lantern on a tree branch	birdhouse	lantern
turtle_fish	a turtle swimming in an aquarium	a fish swimming in an aquarium	turtle	fish
bulb_dog	a doodle of a bulb on a blackboard	a doodle of a dog on a blackboard	bulb	dog
tent_statue	a tent in a forest	a statue in a forest	tent	statue
castle_backpack	a castle on a mountain	a backpack on a mountain	castle	backpack
cat_dog	a cat sleeping on a sofa	a dog sleeping on a sofa	cat	dog
car_bicycle	a red car in the street	a red bicycle in the street	car	bicycle
lion_tiger	a lion resting in the desert	a tiger resting in the desert	lion	tiger
boat_whale	a boat floating on the ocean	a whale floating on the ocean	boat	whale
chef_robot	a chef cooking in a kitchen	a robot cooking in a kitchen	chef	robot
apple_orange	an apple on a wooden table	an orange on a wooden table	apple	orange
astronaut_horse	an astronaut riding on the moon	an horse riding on the moon	astronaut	horse
penguin_duck	a penguin standing on the ice	a duck standing on the ice	penguin	duck
guitar_violin	a guitar leaning against a wall	a violin leaning against a wall	guitar	violin
dragon_knight	a dragon guarding a castle	a knight guarding a castle	dragon	knight
)swapsuffix";

inline constexpr std::string_view kRoundTripText =
    R"swapsuffix(kissing moreover became full photography clown watch viking igloos mule bowls ant highway air lock enchanted artist least several down spider childs con balancing policeman windmills call sometime style airport helmets starfishes train phone yak elsewhere fairy televisions may city boats sloths books raccoon sculptures pirate huge toward troll teapot tower bees toy ostrich wasp grandmothers field else planes couch spoon dove bathroom vampires in starfishes fort hummingbird teas bucket down his of scientist five deer ocean wombats do tiny vans turtles that peaches crabs church cake saxophone sandwich walls mirror move worm one nurses gazelles whatever yourself macaws ants those burgers car kittens your ourselves running two angels farmer fighting grandfather often umbrella angels astronaut troll iguana dwarfs cats wherein teas glowing many trains still fighting caterpillars climbing another planet iguanas climbing mailboxes ltd colorful wombat tiger brooms marsh ox octopus bowls skunk pancakes toucan ovens gliding rooftop namely submarines kicking necklace beach zeppelin monks lambs which cobras rocket cats ox baking burger my playground factory closeup library fountains queen warehouse farmer eel lamb chimpanzee reindeer co ladybugs his sodas hairy attic houses hot kicking moreover tents icecreams middle cry stingrays crane waterfall pancake salmons chateaus sofa drawing she
)swapsuffix";

}  // namespace swapsuffix::bundled
