"""band parse | make | ses | enumerate | brick-search."""
from engine.bands import band_module, brick_band_search, enumerate_bands, jordan_tower_ses, parse_band
from models.band import BandModuleSpec
from routes import EXIT_OK, EXIT_VERIFICATION_FAILED, CommandGroup, argument, context_algebra
from utils.helpers import scalar

band_group = CommandGroup('band', help='band words and band modules')

WORD = argument('word', help='band text such as "a b^-"')


def _spec(args, alg) -> BandModuleSpec:
    lam = scalar(args.lam if args.lam is not None else '1', alg.field)
    return BandModuleSpec(parse_band(args.word, alg), lam, args.m)


@band_group.command('parse', help='validate a band and print its canonical form', arguments=[WORD])
def parse(args):
    alg = context_algebra(args)
    word = parse_band(args.word, alg)
    return {'input': args.word, 'canonical': str(word), 'length': word.length,
            'letters': [{'arrow': x.arrow, 'inverse': x.inverse} for x in word.letters]}, EXIT_OK


@band_group.command('make', help='the band module V(b, λ, m)', arguments=[WORD])
def make(args):
    alg = context_algebra(args)
    rep = band_module(alg, _spec(args, alg))
    return {'dims': rep.dim_vector, 'module': rep.to_dict()}, EXIT_OK


@band_group.command('ses', help='0 -> V(b,λ,m-1) -> V(b,λ,m) -> V(b,λ,1) -> 0', arguments=[WORD])
def ses(args):
    alg = context_algebra(args)
    result = jordan_tower_ses(alg, _spec(args, alg), seed=args.seed)
    payload = {'dims': result['dims'], 'verified': result['verified'], 'checks': result['checks'],
               'f': result['f'].to_dict(), 'g': result['g'].to_dict()}
    return payload, EXIT_OK if result['verified'] else EXIT_VERIFICATION_FAILED


@band_group.command('enumerate', help='canonical bands up to --max-length')
def enumerate_(args):
    alg = context_algebra(args)
    result = enumerate_bands(alg, max_length=args.max_length, seed=args.seed)
    result['bands'] = [str(w) for w in result['bands']]
    result['count'] = len(result['bands'])
    return result, EXIT_OK


@band_group.command('brick-search', help='brick-ness of V(b, λ, 1) over enumerated bands')
def brick_search(args):
    alg = context_algebra(args)
    lambdas = [scalar(args.lam, alg.field)] if args.lam is not None else None
    return brick_band_search(alg, max_length=args.max_length, seed=args.seed, jobs=args.jobs,
                             lambdas=lambdas), EXIT_OK
