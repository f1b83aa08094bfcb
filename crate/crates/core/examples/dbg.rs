use skeinkit::convert::*;
use skeinkit::loopstrings::parse_loopstring;
use skeinkit::graphs::{re_represent, representations};

fn main() {
    let w1 = parse_loopstring("1<2)>3>4").unwrap();
    let m = parse_loopstring("2>1)<3>4").unwrap();
    let g1 = to_loop_graph(&w1).unwrap();
    let gm = to_loop_graph(&m).unwrap();
    println!("g1 = {:?}\n", g1);
    println!("gm = {:?}\n", gm);
    for r in representations(&g1) {
        println!("rep: {:?}\n", r);
    }
    let r = re_represent(&g1, 0);
    let (back, _) = from_loop_graph(&r);
    println!("word of re_represent: {}", back);
}
