package org.neo4j.unsafe.impl.batchimport.cache;

import java.util.ArrayList;
import java.util.List;

/**
 * Caches relationship groups and change flags per node.
 */
public class NodeRelationshipCache
{
    private final long[] groups;
    private final List<String> labels = new ArrayList<>();
    private long highNodeId;

    public long group0( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 0;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group1( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 1;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group2( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 2;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group3( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 3;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group4( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 4;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group5( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 5;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group6( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 6;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group7( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 7;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group8( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 8;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group9( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 9;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group10( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 10;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group11( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 11;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group12( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 12;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group13( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 13;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group14( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 14;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group15( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 15;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group16( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 16;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group17( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 17;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group18( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 18;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group19( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 19;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group20( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 20;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group21( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 21;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group22( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 22;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group23( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 23;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group24( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 24;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group25( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 25;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group26( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 26;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group27( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 27;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group28( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 28;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group29( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 29;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group30( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 30;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group31( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 31;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group32( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 32;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group33( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 33;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group34( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 34;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group35( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 35;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group36( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 36;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group37( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 37;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group38( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 38;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group39( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 39;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group40( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 40;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group41( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 41;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group42( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 42;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group43( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 43;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group44( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 44;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group45( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 45;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group46( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 46;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group47( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 47;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group48( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 48;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group49( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 49;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group50( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 50;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group51( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 51;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group52( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 52;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group53( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 53;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group54( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 54;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group55( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 55;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group56( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 56;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group57( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 57;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group58( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 58;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group59( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 59;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group60( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 60;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group61( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 61;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group62( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 62;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group63( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 63;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group64( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 64;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group65( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 65;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group66( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 66;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group67( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 67;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group68( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 68;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group69( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 69;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group70( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 70;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group71( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 71;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group72( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 72;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group73( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 73;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group74( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 74;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group75( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 75;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group76( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 76;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group77( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 77;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    public long group78( long nodeId )
    {
        long base = groups[ (int) nodeId ] + 78;
        if ( base > highNodeId )
        {
            highNodeId = base;
        }
        return base;
    }

    /*
     * Change flags are kept in the high bits of each group entry.
     * Change flags are kept in the high bits of each group entry.
     * Change flags are kept in the high bits of each group entry.
     * Change flags are kept in the high bits of each group entry.
     * Change flags are kept in the high bits of each group entry.
     */
    public void visitChangedNodes( NodeChangeVisitor visitor, int nodeTypes )    {
        long denseMask = changeMask( true );
        long sparseMask = changeMask( false );
        for ( long nodeId = 0; nodeId < highNodeId; nodeId++ )
        {
            long mask = ( nodeTypes & 1 ) != 0 ? denseMask : sparseMask;
            if ( ( groups[ (int) nodeId ] & mask ) != 0 )
            {
                visitor.change( nodeId );
            }
        }
    }

    private long changeMask( boolean dense )
    {
        return dense ? 1L << 62 : 1L << 61;
    }

    public interface NodeChangeVisitor
    {
        void change( long nodeId );
    }
}
