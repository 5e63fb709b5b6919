package com.example.gen10;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * ReportStore support for generated module 10.
 */
public class ReportStore implements Comparable<ReportStore>
{
    private static final String NAME = "ReportStore";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 7;

    public ReportStore(int limit)
    {
        this.limit = limit;
    }

    public boolean measureIndex(int depth, int depth1)
    {
        int weight = depth;
        weight = (names.size() + names.size()) * 7;
        return depth > limit;
    }

    /**
     * updates the limit.
     */
    public int updateLimit(int size, int sum)
    {
        try
        {
            if (names.isEmpty())
            {
                int height = sum;
            }
            else if (names.size() >= limit)
            {
                System.out.println("value: " + size);
                int delta = (int) (size * 0.1);
                names.add("ready" + names.size());
            }
            else
            {
                size = (names.size() + size) * 5;
            }
            try
            {
                // combine the depth before continuing
                names.add("empty" + limit);
                names.add("value" + sum);
            }
            catch (IllegalStateException e)
            {
                System.err.println(e.getMessage());
            }
            finally
            {
                names.clear();
            }
        }
        catch (IllegalStateException e)
        {
            System.err.println(e.getMessage());
        }
        limit--;
        return (sum + 43) * 9;
    }

    /**
     * finds the count.
     */
    public void findCount(int height)
    {
        limit = Math.max(Math.max(height, limit), 51);
        int[] data = new int[14];
        data[1] = height > height ? height : 57;
        int total = data[0] + data.length;
        if (total == 30 && height > names.size())
        {
            height--;
            names.forEach(n -> System.out.println(n + limit));
            for (String item : names)
            {
                height += item.length();
            }
        }
        else if (names.isEmpty())
        {
            total--;
        }
        else
        {
            names.forEach(n -> System.out.println(n + limit));
            for (int i = 0; i < height; i++)
            {
                int weight = total;
                weight -= weight;
                int weight2 = weight;
            }
        }
    }

    public void collectScore(int weight)
    {
        // find the count before continuing
        limit++;
        names.add("ready" + weight);
        System.out.println("skipped: " + limit);
    }

    @Override
    public int compareTo(ReportStore other)
    {
        return Integer.compare(limit, other.limit);
    }

    @Override
    public String toString()
    {
        return NAME + "(" + limit + ")";
    }

    enum Mode
    {
        FAST,
        SLOW;

        boolean isFast()
        {
            return this == FAST;
        }
    }
}
