//! Compares the two ways of reversing rows in a glide-reflect c/2 search.
//! Only the assignment chosen by `GlideFlip::for_params` admits ships.

use shipsearch::statespace::GlideFlip;
use shipsearch::{run_search, Rule, SearchConfig, SearchParams, Symmetry, Translation};

fn main() {
    let base = SearchParams::new(Rule::LIFE, 2, 1, 5, Symmetry::GlideReflect, Translation::Orthogonal).unwrap();
    let candidates = [
        GlideFlip::for_params(2, 1),
        GlideFlip { reverse_mid: false, reverse_out: true },
    ];
    for flip in candidates {
        let params = base.with_glide_flip(flip);
        let result = run_search(&params, &SearchConfig::default(), &mut ()).unwrap();
        println!(
            "{flip:?}: parity ok {}, {:?} after {} expansions",
            flip.is_valid_for(2, 1),
            result.ships.first().map(|s| s.descriptor.to_string()),
            result.status.states_expanded
        );
    }
}
