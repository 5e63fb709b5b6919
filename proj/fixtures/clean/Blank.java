


package fixtures.lexical;


public class Blank {

    int x;      


    int y;	
}

